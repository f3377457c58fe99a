//! Permutation groups: elements, conjugacy classes, power maps and the
//! derived series.
//!
//! Products follow the right-action convention: `a.then(&b)` maps a point
//! `i` to `b(a(i))`, and conjugation is `x^g = g⁻¹ x g`.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Default cap on the number of elements a group may have before
/// enumeration gives up.
pub const DEFAULT_BUDGET: usize = 200_000;

/// A bijection on `0..degree`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of the given degree from (not necessarily
    /// disjoint) cycles, composed left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut acc = Self::identity(degree);
        for cycle in cycles {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for (pos, &a) in cycle.iter().enumerate() {
                let b = cycle[(pos + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle {cycle:?} exceeds degree {degree}"
                    )));
                }
                images[a as usize] = b;
            }
            acc = acc.then(&Self::from_images(images)?);
        }
        Ok(acc)
    }

    /// Parses cycle notation such as `(0,1,2)(3,4)`; `()` is the identity.
    /// Points may be separated by commas or spaces.
    pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Self> {
        let bad = |m: &str| Error::InvalidPermutation(format!("{text:?}: {m}"));
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let points = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<u32>().map_err(|_| bad("bad point")))
                .collect::<Result<Vec<_>>>()?;
            let mut sorted = points.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != points.len() {
                return Err(bad("repeated point in cycle"));
            }
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        let max_point = cycles
            .iter()
            .flatten()
            .map(|&p| p as usize + 1)
            .max()
            .unwrap_or(1);
        let degree = degree.unwrap_or(max_point);
        if max_point > degree {
            return Err(bad("point exceeds degree"));
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Self { images }
    }

    pub fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.inverse().then(self).then(g)
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(x: &Self, y: &Self) -> Self {
        x.inverse().then(&y.inverse()).then(x).then(y)
    }

    /// Nontrivial cycles, each starting from its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next as u32);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Relabels onto `offset..offset+degree` inside a larger point set.
    pub fn shifted(&self, offset: usize, new_degree: usize) -> Self {
        let mut images: Vec<u32> = (0..new_degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[i + offset] = j + offset as u32;
        }
        Self { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(u32::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

/// A finite group given by generating permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    label: Option<String>,
}

impl PermGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::InvalidPermutation("empty generator list".into()))?;
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Self {
            degree,
            generators,
            label: None,
        })
    }

    /// The trivial group acting on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        Self {
            degree: degree.max(1),
            generators: vec![Permutation::identity(degree.max(1))],
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].then(&g[j]) == g[j].then(&g[i])))
    }

    pub fn enumerate_elements(&self, budget: usize) -> Result<Elements> {
        Elements::closure(self.degree, &self.generators, budget)
    }

    pub fn order(&self, budget: usize) -> Result<usize> {
        Ok(self.enumerate_elements(budget)?.len())
    }

    pub fn conjugacy_data(&self, budget: usize) -> Result<ConjugacyData> {
        ConjugacyData::new(self, budget)
    }

    pub fn derived_series(&self, budget: usize) -> Result<DerivedSeries> {
        DerivedSeries::new(self, budget)
    }

    pub fn is_solvable(&self, budget: usize) -> Result<bool> {
        Ok(self.derived_series(budget)?.is_solvable())
    }
}

/// `a × b` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let degree = a.degree + b.degree;
    let generators = a
        .generators
        .iter()
        .map(|g| g.shifted(0, degree))
        .chain(b.generators.iter().map(|g| g.shifted(a.degree, degree)))
        .collect();
    PermGroup {
        degree,
        generators,
        label: match (a.label(), b.label()) {
            (Some(x), Some(y)) => Some(format!("{x}*{y}")),
            _ => None,
        },
    }
}

/// Every element of a group, identity first, with an index for lookup.
#[derive(Clone, Debug)]
pub struct Elements {
    list: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl Elements {
    /// Breadth-first closure of `generators` under right multiplication.
    pub fn closure(degree: usize, generators: &[Permutation], budget: usize) -> Result<Self> {
        let id = Permutation::identity(degree);
        let mut list = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut head = 0;
        while head < list.len() {
            for g in generators {
                let y = list[head].then(g);
                if !index.contains_key(&y) {
                    if list.len() >= budget {
                        return Err(Error::BudgetExceeded { limit: budget });
                    }
                    index.insert(y.clone(), list.len() as u32);
                    list.push(y);
                }
            }
            head += 1;
        }
        Ok(Self { list, index })
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.list[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.list.iter()
    }

    pub fn into_vec(self) -> Vec<Permutation> {
        self.list
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Element index of the representative (the first class member found).
    pub representative: usize,
    pub size: usize,
    pub order: u64,
    pub members: Vec<u32>,
}

/// Conjugacy classes with their power maps. Class 0 is the identity.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    elements: Elements,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    power_maps: Vec<Vec<u32>>,
    inverse_class: Vec<usize>,
    exponent: u64,
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

impl ConjugacyData {
    pub fn new(group: &PermGroup, budget: usize) -> Result<Self> {
        let elements = group.enumerate_elements(budget)?;
        let n = elements.len();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        let gens: Vec<(Permutation, Permutation)> = group
            .generators
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| (g.inverse(), g.clone()))
            .collect();
        for x in 0..n {
            for (g_inv, g) in &gens {
                let y = g_inv.then(elements.get(x)).then(g);
                let y = elements
                    .index_of(&y)
                    .expect("group closed under conjugation") as u32;
                let (a, b) = (find(&mut parent, x as u32), find(&mut parent, y));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }

        let mut by_root: HashMap<u32, Vec<u32>> = HashMap::new();
        for x in 0..n as u32 {
            let r = find(&mut parent, x);
            by_root.entry(r).or_default().push(x);
        }
        let mut classes: Vec<ConjugacyClass> = by_root
            .into_values()
            .map(|members| {
                let representative = members[0] as usize;
                ConjugacyClass {
                    representative,
                    size: members.len(),
                    order: elements.get(representative).order(),
                    members,
                }
            })
            .collect();
        classes.sort_by_key(|c| (c.order, c.size, c.representative));

        let mut class_of = vec![0u32; n];
        for (k, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m as usize] = k as u32;
            }
        }

        let mut power_maps = Vec::with_capacity(classes.len());
        for c in &classes {
            let rep = elements.get(c.representative);
            let mut row = Vec::with_capacity(c.order as usize);
            let mut acc = Permutation::identity(group.degree);
            for _ in 0..c.order {
                row.push(class_of[elements.index_of(&acc).expect("power in group")]);
                acc = acc.then(rep);
            }
            power_maps.push(row);
        }
        let inverse_class = classes
            .iter()
            .enumerate()
            .map(|(k, c)| {
                power_maps[k][(c.order as usize + c.order as usize - 1) % c.order as usize] as usize
            })
            .collect();
        let exponent = classes.iter().fold(1u64, |acc, c| acc.lcm(&c.order));

        Ok(Self {
            elements,
            classes,
            class_of,
            power_maps,
            inverse_class,
            exponent,
        })
    }

    pub fn elements(&self) -> &Elements {
        &self.elements
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn size(&self, k: usize) -> usize {
        self.classes[k].size
    }

    pub fn element_order(&self, k: usize) -> u64 {
        self.classes[k].order
    }

    pub fn representative(&self, k: usize) -> &Permutation {
        self.elements.get(self.classes[k].representative)
    }

    pub fn class_of_index(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn class_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.index_of(p).map(|i| self.class_of[i] as usize)
    }

    /// Class of `rep_k^t`; `t` is taken modulo the element order.
    pub fn power_map(&self, k: usize, t: i64) -> usize {
        let m = self.classes[k].order as i64;
        self.power_maps[k][t.rem_euclid(m) as usize] as usize
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }
}

/// The derived series `G ⊵ G' ⊵ G'' ⊵ …`, recorded until it reaches the
/// trivial group or stops shrinking.
#[derive(Clone, Debug)]
pub struct DerivedSeries {
    terms: Vec<Vec<Permutation>>,
    orders: Vec<usize>,
}

impl DerivedSeries {
    pub fn new(group: &PermGroup, budget: usize) -> Result<Self> {
        let degree = group.degree;
        let mut gens: Vec<Permutation> = dedup_nontrivial(group.generators.iter().cloned());
        let mut order = Elements::closure(degree, &gens, budget)?.len();
        let mut terms = vec![gens.clone()];
        let mut orders = vec![order];
        while order > 1 {
            let mut commutators = Vec::new();
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    commutators.push(Permutation::commutator(&gens[i], &gens[j]));
                }
            }
            let (next_gens, next) = normal_closure(degree, &gens, commutators, budget)?;
            if next.len() == order {
                break;
            }
            gens = next_gens;
            order = next.len();
            terms.push(gens.clone());
            orders.push(order);
        }
        Ok(Self { terms, orders })
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    /// Generators of each recorded term, starting with the whole group.
    pub fn terms(&self) -> &[Vec<Permutation>] {
        &self.terms
    }

    pub fn is_solvable(&self) -> bool {
        self.orders.last() == Some(&1)
    }
}

fn dedup_nontrivial(perms: impl IntoIterator<Item = Permutation>) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = Vec::new();
    for p in perms {
        if !p.is_identity() && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Smallest subgroup containing `seeds` that is normalised by `conjugators`.
/// Returns a generating set and the element list.
pub fn normal_closure(
    degree: usize,
    conjugators: &[Permutation],
    seeds: Vec<Permutation>,
    budget: usize,
) -> Result<(Vec<Permutation>, Elements)> {
    let mut gens = dedup_nontrivial(seeds);
    let conj: Vec<(Permutation, Permutation)> = conjugators
        .iter()
        .map(|g| (g.inverse(), g.clone()))
        .collect();
    loop {
        let elements = Elements::closure(degree, &gens, budget)?;
        let mut fresh = Vec::new();
        for (g_inv, g) in &conj {
            for x in &gens {
                let y = g_inv.then(x).then(g);
                if !elements.contains(&y) && !fresh.contains(&y) {
                    fresh.push(y);
                }
            }
        }
        if fresh.is_empty() {
            return Ok((gens, elements));
        }
        gens.extend(fresh);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, Some(degree)).unwrap()
    }

    fn group(gens: &[&str], degree: usize) -> PermGroup {
        PermGroup::new(gens.iter().map(|g| perm(g, degree)).collect()).unwrap()
    }

    #[test]
    fn cycle_parsing_and_display() {
        let p = perm("(0,1,2)(3 4)", 5);
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(0,1,2)(3,4)");
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::parse_cycles("(0,0)", None).is_err());
        assert!(Permutation::parse_cycles("(0,5)", Some(3)).is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn product_convention() {
        let a = perm("(0,1)", 3);
        let b = perm("(1,2)", 3);
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(a.then(&a.inverse()), Permutation::identity(3));
        assert_eq!(perm("(0,1,2,3)", 4).pow(-1), perm("(0,3,2,1)", 4));
    }

    #[test]
    fn small_orders() {
        assert_eq!(group(&["(0,1)"], 2).order(DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(
            group(&["(0,1)", "(0,1,2)"], 3)
                .order(DEFAULT_BUDGET)
                .unwrap(),
            6
        );
        let a5 = group(&["(0,1,2,3,4)", "(0,1,2)"], 5);
        let els = a5.enumerate_elements(DEFAULT_BUDGET).unwrap();
        assert_eq!(els.len(), 60);
        assert!(els.get(0).is_identity());
    }

    #[test]
    fn budget_is_enforced() {
        let s5 = group(&["(0,1)", "(0,1,2,3,4)"], 5);
        assert_eq!(
            s5.enumerate_elements(100).unwrap_err(),
            Error::BudgetExceeded { limit: 100 }
        );
        assert!(s5.enumerate_elements(120).is_ok());
    }

    #[test]
    fn conjugacy_of_s3_and_c4() {
        let s3 = group(&["(0,1)", "(0,1,2)"], 3)
            .conjugacy_data(DEFAULT_BUDGET)
            .unwrap();
        let sizes: Vec<usize> = s3.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(s3.exponent(), 6);

        let c4 = group(&["(0,1,2,3)"], 4)
            .conjugacy_data(DEFAULT_BUDGET)
            .unwrap();
        assert_eq!(c4.num_classes(), 4);
        assert!(c4.classes().iter().all(|c| c.size == 1));
        assert_eq!(c4.exponent(), 4);
    }

    #[test]
    fn power_maps_and_inverses() {
        let c4 = group(&["(0,1,2,3)"], 4)
            .conjugacy_data(DEFAULT_BUDGET)
            .unwrap();
        for k in 0..c4.num_classes() {
            let m = c4.element_order(k) as i64;
            assert_eq!(c4.power_map(k, 1), k);
            assert_eq!(c4.power_map(k, m), 0);
            assert_eq!(c4.inverse_class(k), c4.power_map(k, m - 1));
            assert_eq!(c4.power_map(k, -1), c4.inverse_class(k));
        }
    }

    #[test]
    fn derived_series_examples() {
        let s4 = group(&["(0,1)", "(0,1,2,3)"], 4);
        let series = s4.derived_series(DEFAULT_BUDGET).unwrap();
        assert_eq!(series.orders(), &[24, 12, 4, 1]);
        assert!(series.is_solvable());

        let c1 = PermGroup::trivial(1);
        assert!(c1.is_solvable(DEFAULT_BUDGET).unwrap());

        let a5 = group(&["(0,1,2,3,4)", "(0,1,2)"], 5);
        let series = a5.derived_series(DEFAULT_BUDGET).unwrap();
        assert_eq!(series.orders(), &[60]);
        assert!(!series.is_solvable());
    }

    #[test]
    fn direct_products() {
        let c2 = group(&["(0,1)"], 2);
        let c3 = group(&["(0,1,2)"], 3);
        let p = direct_product(&c2, &c3);
        assert_eq!(p.degree(), 5);
        let cd = p.conjugacy_data(DEFAULT_BUDGET).unwrap();
        assert_eq!(cd.group_order(), 6);
        assert_eq!(cd.num_classes(), 6);

        let a5 = group(&["(0,1,2,3,4)", "(0,1,2)"], 5);
        let cd = direct_product(&a5, &c2)
            .conjugacy_data(DEFAULT_BUDGET)
            .unwrap();
        assert_eq!((cd.group_order(), cd.num_classes()), (120, 10));

        let s3 = group(&["(0,1)", "(0,1,2)"], 3);
        let cd = direct_product(&s3, &PermGroup::trivial(1))
            .conjugacy_data(DEFAULT_BUDGET)
            .unwrap();
        assert_eq!((cd.group_order(), cd.num_classes()), (6, 3));
    }
}
