//! Named group families as permutation groups, and closed-form character
//! degree sets for the almost simple families.
//!
//! Text syntax (see [`GroupSpec::from_str`]): `C(n)`, `EA(p,n)`, `GD(p,n)`,
//! `D(n)`, `S(n)`, `A(n)`, `PSL(2,q)`, `PGL(2,q)`, `SL(2,q)`,
//! `PGammaL(2,q)`, `PSLExt(2,q;w[,w…])` with words over `d` (diagonal) and
//! `f` (field), `M10`, `X*Y`, and `perm:[label:]gen;gen…` with generators
//! in 0-based cycle notation.

pub mod field;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use field::{prime_power, FiniteField};

use crate::error::{Error, Result};
use crate::permgroup::{direct_product, PermGroup, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OuterLetter {
    /// Diagonal automorphism, `x ↦ νx` with `ν` a non-square.
    Delta,
    /// Field automorphism `x ↦ x^p`.
    Phi,
}

/// A word in the outer automorphisms of `PSL₂(q)`, read as a composition
/// of maps (rightmost applied first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OuterWord(pub Vec<OuterLetter>);

impl FromStr for OuterWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            let letter = match c {
                'd' | 'δ' => OuterLetter::Delta,
                'f' | 'φ' | 'ϕ' => OuterLetter::Phi,
                c if c.is_whitespace() => continue,
                other => return Err(Error::InvalidSpec(format!("outer word letter {other:?}"))),
            };
            let mut reps = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut num = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    num.push(*d);
                    chars.next();
                }
                reps = num
                    .parse()
                    .map_err(|_| Error::InvalidSpec(format!("bad exponent in outer word {s:?}")))?;
            }
            letters.extend(std::iter::repeat_n(letter, reps));
        }
        if letters.is_empty() {
            return Err(Error::InvalidSpec("empty outer word".into()));
        }
        Ok(Self(letters))
    }
}

impl fmt::Display for OuterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                OuterLetter::Delta => "d",
                OuterLetter::Phi => "f",
            })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u32),
    ElementaryAbelian {
        p: u32,
        n: u32,
    },
    GeneralizedDihedral {
        p: u32,
        n: u32,
    },
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    Psl2(u32),
    Pgl2(u32),
    Sl2(u32),
    PGammaL2(u32),
    Psl2Ext {
        q: u32,
        words: Vec<OuterWord>,
    },
    M10,
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    Permutations {
        label: Option<String>,
        generators: Vec<Permutation>,
    },
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_u32(s: &str, what: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidSpec(format!("{what}: expected a positive integer, got {s:?}")))
}

fn parse_perm_spec(body: &str) -> Result<GroupSpec> {
    let (label, gens) = match body.find(':') {
        Some(i) if !body.starts_with('(') => (Some(body[..i].to_string()), &body[i + 1..]),
        _ => (None, body),
    };
    let parsed: Vec<Permutation> = gens
        .split(';')
        .map(|g| Permutation::parse_cycles(g, None))
        .collect::<Result<_>>()
        .map_err(|e| Error::InvalidSpec(e.to_string()))?;
    let degree = parsed.iter().map(Permutation::degree).max().unwrap_or(1);
    let generators = parsed.iter().map(|p| p.shifted(0, degree)).collect();
    Ok(GroupSpec::Permutations { label, generators })
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(body) = compact.strip_prefix("perm:") {
            return parse_perm_spec(body);
        }
        let factors = split_top_level(&compact, '*');
        if factors.len() > 1 {
            let mut iter = factors.into_iter().map(str::parse::<GroupSpec>);
            let first = iter.next().expect("nonempty")?;
            return iter.try_fold(first, |acc, next| {
                Ok(GroupSpec::DirectProduct(Box::new(acc), Box::new(next?)))
            });
        }
        if compact == "M10" || compact == "M(10)" {
            return Ok(GroupSpec::M10);
        }
        let open = compact
            .find('(')
            .ok_or_else(|| Error::InvalidSpec(format!("unrecognised group {text:?}")))?;
        let name = &compact[..open];
        let args = compact[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::InvalidSpec(format!("missing ')' in {text:?}")))?;
        let (args, words) = match args.split_once(';') {
            Some((a, w)) => (a, Some(w)),
            None => (args, None),
        };
        let nums: Vec<&str> = args.split(',').collect();
        let one = |what: &str| -> Result<u32> {
            match nums.as_slice() {
                [n] => parse_u32(n, what),
                _ => Err(Error::InvalidSpec(format!("{name} takes one argument"))),
            }
        };
        let two = || -> Result<(u32, u32)> {
            match nums.as_slice() {
                [a, b] => Ok((parse_u32(a, name)?, parse_u32(b, name)?)),
                _ => Err(Error::InvalidSpec(format!("{name} takes two arguments"))),
            }
        };
        let linear = || -> Result<u32> {
            let (dim, q) = two()?;
            if dim != 2 {
                return Err(Error::InvalidSpec(format!(
                    "only dimension 2 is supported, got {name}({dim},{q})"
                )));
            }
            if prime_power(q).is_none() {
                return Err(Error::InvalidSpec(format!("{q} is not a prime power")));
            }
            Ok(q)
        };
        if words.is_some() && name != "PSLExt" {
            return Err(Error::InvalidSpec(format!("unexpected ';' in {text:?}")));
        }
        let spec = match name {
            "C" => GroupSpec::Cyclic(one("C")?),
            "EA" => {
                let (p, n) = two()?;
                GroupSpec::ElementaryAbelian { p, n }
            }
            "GD" => {
                let (p, n) = two()?;
                GroupSpec::GeneralizedDihedral { p, n }
            }
            "D" => GroupSpec::Dihedral(one("D")?),
            "S" => GroupSpec::Symmetric(one("S")?),
            "A" => GroupSpec::Alternating(one("A")?),
            "PSL" | "L" => GroupSpec::Psl2(linear()?),
            "PGL" => GroupSpec::Pgl2(linear()?),
            "SL" => GroupSpec::Sl2(linear()?),
            "PGammaL" | "PΓL" => GroupSpec::PGammaL2(linear()?),
            "PSLExt" => {
                let q = linear()?;
                let words = words
                    .ok_or_else(|| Error::InvalidSpec("PSLExt needs outer words after ';'".into()))?
                    .split(',')
                    .map(str::parse)
                    .collect::<Result<Vec<OuterWord>>>()?;
                GroupSpec::Psl2Ext { q, words }
            }
            _ => return Err(Error::InvalidSpec(format!("unknown family {name:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::ElementaryAbelian { p, n } => write!(f, "EA({p},{n})"),
            GroupSpec::GeneralizedDihedral { p, n } => write!(f, "GD({p},{n})"),
            GroupSpec::Dihedral(n) => write!(f, "D({n})"),
            GroupSpec::Symmetric(n) => write!(f, "S({n})"),
            GroupSpec::Alternating(n) => write!(f, "A({n})"),
            GroupSpec::Psl2(q) => write!(f, "PSL(2,{q})"),
            GroupSpec::Pgl2(q) => write!(f, "PGL(2,{q})"),
            GroupSpec::Sl2(q) => write!(f, "SL(2,{q})"),
            GroupSpec::PGammaL2(q) => write!(f, "PGammaL(2,{q})"),
            GroupSpec::Psl2Ext { q, words } => {
                let w: Vec<String> = words.iter().map(ToString::to_string).collect();
                write!(f, "PSLExt(2,{q};{})", w.join(","))
            }
            GroupSpec::M10 => write!(f, "M10"),
            GroupSpec::DirectProduct(a, b) => write!(f, "{a}*{b}"),
            GroupSpec::Permutations { label, generators } => {
                write!(f, "perm:")?;
                if let Some(l) = label {
                    write!(f, "{l}:")?;
                }
                let g: Vec<String> = generators.iter().map(ToString::to_string).collect();
                write!(f, "{}", g.join(";"))
            }
        }
    }
}

/// The subgroup of `Out(PSL₂(q)) = ⟨δ⟩ × ⟨φ⟩` generated by some words, as
/// a set of `(δ exponent, φ exponent)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterSubgroup {
    delta_order: u32,
    phi_order: u32,
    elements: BTreeSet<(u32, u32)>,
}

impl OuterSubgroup {
    pub fn generated(q: u32, gens: &[(u32, u32)]) -> Self {
        let (_, f) = prime_power(q).expect("prime power");
        let delta_order = if q.is_multiple_of(2) { 1 } else { 2 };
        let reduce = |(d, p): (u32, u32)| (d % delta_order, p % f);
        let gens: Vec<(u32, u32)> = gens.iter().copied().map(reduce).collect();
        let mut elements = BTreeSet::from([(0, 0)]);
        let mut frontier = vec![(0, 0)];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = reduce((x.0 + g.0, x.1 + g.1));
                if elements.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Self {
            delta_order,
            phi_order: f,
            elements,
        }
    }

    pub fn from_words(q: u32, words: &[OuterWord]) -> Self {
        let gens: Vec<(u32, u32)> = words
            .iter()
            .map(|w| {
                let d = w.0.iter().filter(|&&l| l == OuterLetter::Delta).count() as u32;
                (d, w.0.len() as u32 - d)
            })
            .collect();
        Self::generated(q, &gens)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn is(&self, q: u32, gens: &[(u32, u32)]) -> bool {
        *self == Self::generated(q, gens)
    }
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        match self {
            GroupSpec::Cyclic(0) => bad("C(0)".into()),
            GroupSpec::ElementaryAbelian { p, .. } | GroupSpec::GeneralizedDihedral { p, .. }
                if !is_prime(*p) =>
            {
                bad(format!("{p} is not prime"))
            }
            GroupSpec::Dihedral(n) if *n < 3 => bad(format!("D({n}) needs n ≥ 3")),
            GroupSpec::Symmetric(0) | GroupSpec::Alternating(0) => bad("degree 0".into()),
            GroupSpec::Psl2(q)
            | GroupSpec::Pgl2(q)
            | GroupSpec::Sl2(q)
            | GroupSpec::PGammaL2(q)
                if prime_power(*q).is_none() =>
            {
                bad(format!("{q} is not a prime power"))
            }
            GroupSpec::Psl2Ext { q, words } if prime_power(*q).is_none() || words.is_empty() => {
                bad(format!("PSLExt over {q} with {} words", words.len()))
            }
            GroupSpec::DirectProduct(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Closed-form group order.
    pub fn expected_order(&self) -> u64 {
        let psl = |q: u64| q * (q * q - 1) / if q.is_multiple_of(2) { 1 } else { 2 };
        match self {
            GroupSpec::Cyclic(n) => *n as u64,
            GroupSpec::ElementaryAbelian { p, n } => (*p as u64).pow(*n),
            GroupSpec::GeneralizedDihedral { p, n } => {
                (*p as u64).pow(*n) * if *p == 2 { 1 } else { 2 }
            }
            GroupSpec::Dihedral(n) => 2 * *n as u64,
            GroupSpec::Symmetric(n) => factorial(*n),
            GroupSpec::Alternating(n) => (factorial(*n) / 2).max(1),
            GroupSpec::Psl2(q) => psl(*q as u64),
            GroupSpec::Pgl2(q) | GroupSpec::Sl2(q) => {
                let q = *q as u64;
                q * (q * q - 1)
            }
            GroupSpec::PGammaL2(q) => {
                let (_, f) = prime_power(*q).expect("validated");
                let q = *q as u64;
                q * (q * q - 1) * f as u64
            }
            GroupSpec::Psl2Ext { q, words } => {
                psl(*q as u64) * OuterSubgroup::from_words(*q, words).order() as u64
            }
            GroupSpec::M10 => 720,
            GroupSpec::DirectProduct(a, b) => a.expected_order() * b.expected_order(),
            GroupSpec::Permutations { generators, .. } => PermGroup::new(generators.clone())
                .and_then(|g| g.order(crate::permgroup::DEFAULT_BUDGET))
                .map_or(0, |n| n as u64),
        }
    }

    /// For the projective families: `q` and the outer part over `PSL₂(q)`.
    pub fn projective_outer(&self) -> Option<(u32, OuterSubgroup)> {
        match self {
            GroupSpec::Psl2(q) => Some((*q, OuterSubgroup::generated(*q, &[]))),
            GroupSpec::Pgl2(q) => Some((*q, OuterSubgroup::generated(*q, &[(1, 0)]))),
            GroupSpec::PGammaL2(q) => Some((*q, OuterSubgroup::generated(*q, &[(1, 0), (0, 1)]))),
            GroupSpec::Psl2Ext { q, words } => Some((*q, OuterSubgroup::from_words(*q, words))),
            GroupSpec::M10 => Some((9, OuterSubgroup::generated(9, &[(1, 1)]))),
            _ => None,
        }
    }

    pub fn is_abelian_family(&self) -> bool {
        match self {
            GroupSpec::Cyclic(_) | GroupSpec::ElementaryAbelian { .. } => true,
            GroupSpec::DirectProduct(a, b) => a.is_abelian_family() && b.is_abelian_family(),
            _ => false,
        }
    }

    /// Builds the permutation group.
    pub fn build(&self) -> Result<PermGroup> {
        self.validate()?;
        let group = match self {
            GroupSpec::Cyclic(n) => cyclic(*n as usize)?,
            GroupSpec::ElementaryAbelian { p, n } => vector_group(*p, *n, false)?,
            GroupSpec::GeneralizedDihedral { p, n } => vector_group(*p, *n, true)?,
            GroupSpec::Dihedral(n) => {
                let n = *n as usize;
                let rot = Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect())?;
                let refl =
                    Permutation::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
                PermGroup::new(vec![rot, refl])?
            }
            GroupSpec::Symmetric(n) => symmetric(*n as usize)?,
            GroupSpec::Alternating(n) => alternating(*n as usize)?,
            GroupSpec::Sl2(q) => special_linear(*q)?,
            GroupSpec::DirectProduct(a, b) => direct_product(&a.build()?, &b.build()?),
            GroupSpec::Permutations { generators, .. } => PermGroup::new(generators.clone())?,
            _ => {
                let (q, outer) = self.projective_outer().expect("projective family");
                let gens: Vec<(u32, u32)> = match self {
                    GroupSpec::Psl2Ext { words, .. } => words
                        .iter()
                        .map(|w| {
                            let d = w.0.iter().filter(|&&l| l == OuterLetter::Delta).count() as u32;
                            (d, w.0.len() as u32 - d)
                        })
                        .collect(),
                    _ => outer
                        .elements
                        .iter()
                        .copied()
                        .filter(|&x| x != (0, 0))
                        .collect(),
                };
                projective(q, &gens)?
            }
        };
        Ok(group.with_label(self.to_string()))
    }

    /// The closed-form character degree set, where one is known.
    pub fn predicted_cd(&self) -> Result<BTreeSet<u64>> {
        let unsupported = || Err(Error::Unsupported(self.to_string()));
        match self {
            GroupSpec::Cyclic(_) | GroupSpec::ElementaryAbelian { .. } => Ok(BTreeSet::from([1])),
            GroupSpec::Alternating(5) => GroupSpec::Psl2(5).predicted_cd(),
            GroupSpec::Alternating(6) => GroupSpec::Psl2(9).predicted_cd(),
            GroupSpec::Symmetric(5) => GroupSpec::Pgl2(5).predicted_cd(),
            GroupSpec::Symmetric(6) => GroupSpec::Psl2Ext {
                q: 9,
                words: vec![OuterWord(vec![OuterLetter::Phi])],
            }
            .predicted_cd(),
            GroupSpec::DirectProduct(a, b) => {
                let (a, b) = (a.predicted_cd()?, b.predicted_cd()?);
                Ok(a.iter()
                    .flat_map(|x| b.iter().map(move |y| x * y))
                    .collect())
            }
            _ => match self.projective_outer() {
                Some((q, outer)) => predicted_projective(q, &outer).map_or_else(unsupported, Ok),
                None => unsupported(),
            },
        }
    }
}

fn predicted_projective(q: u32, h: &OuterSubgroup) -> Option<BTreeSet<u64>> {
    let (p, f) = prime_power(q)?;
    let qq = q as u64;
    let ff = f as u64;
    if q < 4 {
        return None;
    }
    let set = |v: &[u64]| Some(v.iter().copied().collect::<BTreeSet<u64>>());
    let half = f / 2;
    if p == 2 {
        if h.is(q, &[]) {
            // PSL₂(2^f), f ≥ 2
            return set(&[1, qq - 1, qq, qq + 1]);
        }
        if h.is(q, &[(0, 1)]) && f > 2 && is_prime(f) {
            return set(&[1, qq - 1, qq, (qq - 1) * ff, (qq + 1) * ff]);
        }
        if f > 2 && f % 2 == 0 && h.is(q, &[(0, half)]) {
            return set(&[1, qq, qq + 1, 2 * (qq - 1), 2 * (qq + 1)]);
        }
        return None;
    }
    if h.is(q, &[]) {
        if q == 5 {
            // PSL₂(5) ≅ PSL₂(4): only four degrees
            return set(&[1, 3, 4, 5]);
        }
        let eps: i64 = if q % 4 == 1 { 1 } else { -1 };
        let half_deg = ((qq as i64 + eps) / 2) as u64;
        return set(&[1, half_deg, qq - 1, qq, qq + 1]);
    }
    if h.is(q, &[(1, 0)]) {
        return set(&[1, qq - 1, qq, qq + 1]);
    }
    if q == 9 && h.is(q, &[(0, 1)]) {
        return set(&[1, 5, 9, 10, 16]);
    }
    if q == 9 && h.is(q, &[(1, 1)]) {
        return set(&[1, 9, 10, 16]);
    }
    if f > 2 && f % 2 == 0 && h.is(q, &[(1, 0), (0, half)]) {
        return set(&[1, qq, qq + 1, 2 * (qq - 1), 2 * (qq + 1)]);
    }
    if p == 3 && f > 2 && f % 2 == 0 && h.is(q, &[(1, 0), (0, 1)]) {
        // printed as {1, 3^f, 3^f − 1, (3^f ± 1)f}
        return set(&[1, qq, qq - 1, (qq - 1) * ff, (qq + 1) * ff]);
    }
    if p == 5 && f > 2 && is_prime(f) && h.is(q, &[(0, 1)]) {
        // six values as printed
        return set(&[1, qq, qq.div_ceil(2), qq - 1, (qq - 1) * ff, (qq + 1) * ff]);
    }
    if f > 2 && f % 2 == 0 && q != 9 && h.is(q, &[(1, half)]) {
        return set(&[1, qq, qq + 1, 2 * (qq - 1), 2 * (qq + 1)]);
    }
    None
}

fn cyclic(n: usize) -> Result<PermGroup> {
    let images = (0..n).map(|i| ((i + 1) % n) as u32).collect();
    PermGroup::new(vec![Permutation::from_images(images)?])
}

fn symmetric(n: usize) -> Result<PermGroup> {
    if n <= 1 {
        return Ok(PermGroup::trivial(1));
    }
    let t = Permutation::from_cycles(n, &[vec![0, 1]])?;
    let c = Permutation::from_cycles(n, &[(0..n as u32).collect()])?;
    PermGroup::new(vec![t, c])
}

fn alternating(n: usize) -> Result<PermGroup> {
    if n <= 2 {
        return Ok(PermGroup::trivial(n));
    }
    let three = Permutation::from_cycles(n, &[vec![0, 1, 2]])?;
    let long: Vec<u32> = if n % 2 == 1 {
        (0..n as u32).collect()
    } else {
        (1..n as u32).collect()
    };
    let long = Permutation::from_cycles(n, &[long])?;
    PermGroup::new(vec![long, three])
}

// Translations of (Z_p)^n, optionally with the inversion map.
fn vector_group(p: u32, n: u32, inversion: bool) -> Result<PermGroup> {
    let p = p as usize;
    let size = p.pow(n);
    let digit = |x: usize, i: u32| (x / p.pow(i)) % p;
    let mut gens = Vec::new();
    for i in 0..n {
        let step = p.pow(i);
        let images = (0..size)
            .map(|x| {
                let d = digit(x, i);
                (x - d * step + ((d + 1) % p) * step) as u32
            })
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    if inversion && p > 2 {
        let images = (0..size)
            .map(|x| {
                (0..n)
                    .map(|i| ((p - digit(x, i)) % p) * p.pow(i))
                    .sum::<usize>() as u32
            })
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    if gens.is_empty() {
        return Ok(PermGroup::trivial(size));
    }
    PermGroup::new(gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Point {
    Infinity,
    Finite(u32),
}

/// Points of the projective line: `∞`, `0`, then `ν⁰, ν¹, …`.
struct ProjectiveLine<'a> {
    field: &'a FiniteField,
}

impl ProjectiveLine<'_> {
    fn index(&self, pt: Point) -> u32 {
        match pt {
            Point::Infinity => 0,
            Point::Finite(0) => 1,
            Point::Finite(x) => 2 + self.field.log(x),
        }
    }

    fn point(&self, idx: u32) -> Point {
        match idx {
            0 => Point::Infinity,
            1 => Point::Finite(0),
            i => Point::Finite(self.field.generator_power(i - 2)),
        }
    }

    fn size(&self) -> u32 {
        self.field.order() + 1
    }

    fn permutation(&self, map: impl Fn(Point) -> Point) -> Result<Permutation> {
        Permutation::from_images(
            (0..self.size())
                .map(|i| self.index(map(self.point(i))))
                .collect(),
        )
    }

    /// `x ↦ (ax + b)/(cx + d)`.
    fn mobius(&self, [a, b, c, d]: [u32; 4]) -> Result<Permutation> {
        let k = self.field;
        self.permutation(|pt| match pt {
            Point::Infinity if c == 0 => Point::Infinity,
            Point::Infinity => Point::Finite(k.mul(a, k.inv(c))),
            Point::Finite(x) => {
                let den = k.add(k.mul(c, x), d);
                if den == 0 {
                    Point::Infinity
                } else {
                    Point::Finite(k.mul(k.add(k.mul(a, x), b), k.inv(den)))
                }
            }
        })
    }

    fn frobenius(&self) -> Result<Permutation> {
        self.permutation(|pt| match pt {
            Point::Infinity => Point::Infinity,
            Point::Finite(x) => Point::Finite(self.field.frobenius(x)),
        })
    }
}

/// `⟨PSL₂(q), outer…⟩` on the projective line; each outer generator is
/// `δ^a φ^b`, i.e. `x ↦ ν^a · x^{p^b}`.
fn projective(q: u32, outer: &[(u32, u32)]) -> Result<PermGroup> {
    let field = FiniteField::new(q)
        .ok_or_else(|| Error::InvalidSpec(format!("{q} is not a prime power")))?;
    let line = ProjectiveLine { field: &field };
    let nu = field.generator();
    let nu2 = field.mul(nu, nu);
    let minus_one = field.neg(1);
    let mut gens = vec![
        line.mobius([1, 1, 0, 1])?,
        line.mobius([nu2, 0, 0, 1])?,
        line.mobius([0, minus_one, 1, 0])?,
    ];
    let delta = line.mobius([nu, 0, 0, 1])?;
    let phi = line.frobenius()?;
    for &(d, f) in outer {
        let mut g = phi.pow(f as i64);
        if d % 2 == 1 {
            g = g.then(&delta);
        }
        gens.push(g);
    }
    PermGroup::new(gens)
}

/// SL₂(q) acting on the nonzero vectors of `F_q²`.
fn special_linear(q: u32) -> Result<PermGroup> {
    let k = FiniteField::new(q)
        .ok_or_else(|| Error::InvalidSpec(format!("{q} is not a prime power")))?;
    let index = |u: u32, v: u32| u * q + v - 1;
    let act = |[a, b, c, d]: [u32; 4]| -> Result<Permutation> {
        let mut images = vec![0u32; (q * q - 1) as usize];
        for u in 0..q {
            for v in 0..q {
                if u == 0 && v == 0 {
                    continue;
                }
                let nu = k.add(k.mul(a, u), k.mul(b, v));
                let nv = k.add(k.mul(c, u), k.mul(d, v));
                images[index(u, v) as usize] = index(nu, nv);
            }
        }
        Permutation::from_images(images)
    };
    let nu = k.generator();
    PermGroup::new(vec![
        act([1, 1, 0, 1])?,
        act([nu, 0, 0, k.inv(nu)])?,
        act([0, k.neg(1), 1, 0])?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_BUDGET;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "C(12)",
            "EA(3,2)",
            "GD(3,2)",
            "D(5)",
            "S(6)",
            "A(7)",
            "PSL(2,9)",
            "PGL(2,7)",
            "SL(2,5)",
            "PGammaL(2,8)",
            "PSLExt(2,16;ff)",
            "PSLExt(2,81;d,ff)",
            "M10",
            "PSL(2,5)*C(2)",
            "perm:Q8:(0,1,3,6)(2,5,7,4);(0,2,3,7)(1,4,6,5)",
        ] {
            assert_eq!(spec(s).to_string(), s);
        }
        assert_eq!(spec("PSLExt(2,16;f^2)").to_string(), "PSLExt(2,16;ff)");
        assert_eq!(spec(" PSL(2, 5) * C(3) ").to_string(), "PSL(2,5)*C(3)");
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "PSL(2,6)",
            "PSL(3,4)",
            "X(3)",
            "C(0)",
            "D(2)",
            "GD(4,1)",
            "PSLExt(2,9)",
            "PSLExt(2,9;x)",
            "C(3",
        ] {
            assert!(
                matches!(bad.parse::<GroupSpec>(), Err(Error::InvalidSpec(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn orders_match_closed_forms() {
        for s in [
            "C(1)",
            "C(7)",
            "EA(3,2)",
            "GD(3,3)",
            "GD(5,1)",
            "D(4)",
            "D(6)",
            "S(5)",
            "A(6)",
            "PSL(2,4)",
            "PSL(2,5)",
            "PSL(2,7)",
            "PSL(2,8)",
            "PSL(2,9)",
            "PGL(2,5)",
            "PGL(2,9)",
            "SL(2,5)",
            "PGammaL(2,8)",
            "PGammaL(2,9)",
            "M10",
            "PSLExt(2,9;f)",
            "PSL(2,5)*C(3)",
        ] {
            let g = spec(s);
            assert_eq!(
                g.build().unwrap().order(DEFAULT_BUDGET).unwrap() as u64,
                g.expected_order(),
                "{s}"
            );
        }
    }

    #[test]
    fn projective_line_labels() {
        let field = FiniteField::new(9).unwrap();
        let line = ProjectiveLine { field: &field };
        for i in 0..10 {
            assert_eq!(line.index(line.point(i)), i);
        }
        assert_eq!(line.point(2), Point::Finite(1));
    }

    #[test]
    fn outer_subgroups() {
        let m10 = OuterSubgroup::from_words(9, &[spec_word("df")]);
        assert_eq!(m10.order(), 2);
        assert!(m10.is(9, &[(1, 1)]));
        let full = OuterSubgroup::from_words(9, &[spec_word("d"), spec_word("f")]);
        assert_eq!(full.order(), 4);
        // δ is trivial in characteristic 2
        assert_eq!(OuterSubgroup::from_words(16, &[spec_word("d")]).order(), 1);
    }

    fn spec_word(s: &str) -> OuterWord {
        s.parse().unwrap()
    }

    #[test]
    fn predicted_degree_sets() {
        let cd = |s: &str| {
            spec(s)
                .predicted_cd()
                .unwrap()
                .into_iter()
                .collect::<Vec<_>>()
        };
        assert_eq!(cd("PSL(2,7)"), vec![1, 3, 6, 7, 8]);
        assert_eq!(cd("PSL(2,5)"), vec![1, 3, 4, 5]);
        assert_eq!(cd("PSL(2,4)"), vec![1, 3, 4, 5]);
        assert_eq!(cd("PSL(2,13)"), vec![1, 7, 12, 13, 14]);
        assert_eq!(cd("PGammaL(2,8)"), vec![1, 7, 8, 21, 27]);
        assert_eq!(cd("PSLExt(2,16;ff)"), vec![1, 16, 17, 30, 34]);
        assert_eq!(cd("S(6)"), vec![1, 5, 9, 10, 16]);
        assert_eq!(cd("PSLExt(2,9;f)"), vec![1, 5, 9, 10, 16]);
        assert_eq!(cd("M10"), vec![1, 9, 10, 16]);
        assert_eq!(cd("PGL(2,9)"), vec![1, 8, 9, 10]);
        assert_eq!(cd("PSL(2,5)*C(2)"), vec![1, 3, 4, 5]);
        // (d) q = 81: PGL₂(81)⟨φ²⟩
        assert_eq!(cd("PSLExt(2,81;d,ff)"), vec![1, 81, 82, 160, 164]);
        // (e) q = 81: PGL₂(81)⟨φ⟩
        assert_eq!(cd("PGammaL(2,81)"), vec![1, 80, 81, 320, 328]);
        // (g) q = 125: six values as printed
        assert_eq!(cd("PSLExt(2,125;f)"), vec![1, 63, 124, 125, 372, 378]);
        // (h) q = 81: PSL₂(81)⟨δφ²⟩
        assert_eq!(cd("PSLExt(2,81;dff)"), vec![1, 81, 82, 160, 164]);
        assert!(matches!(
            spec("PGammaL(2,9)").predicted_cd(),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            spec("GD(3,1)").predicted_cd(),
            Err(Error::Unsupported(_))
        ));
    }
}
