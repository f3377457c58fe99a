//! Exact character tables, and the value and degree sets read off them.

pub mod dixon;
pub mod equivalence;
pub mod export;
pub mod modular;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::permgroup::{ConjugacyData, PermGroup};

pub use dixon::{class_mult_coeff, select_prime, ClassCoefficients, DixonContext};
pub use equivalence::{tables_equivalent, TableShape};

/// Irreducible characters of a group. Rows are characters sorted by
/// degree (trivial character first), columns follow the class order of the
/// underlying [`ConjugacyData`]. All values share the conductor
/// `exponent(G)`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    conj: ConjugacyData,
    conductor: u32,
    degrees: Vec<u64>,
    values: Vec<Vec<Cyclotomic>>,
}

/// A normal subgroup given as a union of conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalSubgroup {
    pub order: usize,
    pub classes: Vec<usize>,
}

/// Decomposition of a restricted character into irreducibles of a subgroup.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub sub_table: CharacterTable,
    /// Values of the restricted character, one per subgroup class.
    pub restricted: Vec<Cyclotomic>,
    /// `(row of sub_table, multiplicity)` for every constituent.
    pub constituents: Vec<(usize, u64)>,
}

impl CharacterTable {
    pub fn compute(group: &PermGroup, budget: usize) -> Result<Self> {
        Self::from_conjugacy(group.conjugacy_data(budget)?)
    }

    /// Runs the Dixon–Schneider pipeline and verifies the result.
    pub fn from_conjugacy(conj: ConjugacyData) -> Result<Self> {
        let ctx = dixon::select_prime(&conj);
        let coeffs = ClassCoefficients::compute(&conj);
        let omegas = dixon::central_characters(&coeffs, ctx.prime)?;
        if omegas.len() != conj.num_classes() {
            return Err(Error::SplitFailure(format!(
                "{} eigenvectors for {} classes",
                omegas.len(),
                conj.num_classes()
            )));
        }
        let mut rows = omegas
            .par_iter()
            .enumerate()
            .map(|(r, omega)| dixon::lift_character(r, omega, &conj, &ctx))
            .collect::<Result<Vec<_>>>()?;

        let one = Cyclotomic::one(ctx.exponent as u32);
        let is_trivial = |row: &[Cyclotomic]| row.iter().all(|v| *v == one);
        rows.sort_by(|(da, va), (db, vb)| {
            da.cmp(db)
                .then_with(|| is_trivial(vb).cmp(&is_trivial(va)))
                .then_with(|| va.cmp(vb))
        });
        let (degrees, values) = rows.into_iter().unzip();
        let table = Self {
            conductor: ctx.exponent as u32,
            conj,
            degrees,
            values,
        };
        table.verify()?;
        Ok(table)
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        &self.conj
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn group_order(&self) -> usize {
        self.conj.group_order()
    }

    pub fn num_classes(&self) -> usize {
        self.values.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn values(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.values[row][class]
    }

    /// ATLAS-style class names: element order followed by a letter.
    pub fn class_names(&self) -> Vec<String> {
        let mut seen: std::collections::HashMap<u64, usize> = Default::default();
        (0..self.num_classes())
            .map(|k| {
                let order = self.conj.element_order(k);
                let idx = seen.entry(order).or_insert(0);
                let name = format!("{order}{}", letter_suffix(*idx));
                *idx += 1;
                name
            })
            .collect()
    }

    /// Checks every orthogonality identity exactly.
    pub fn verify(&self) -> Result<()> {
        let k = self.num_classes();
        let order = self.group_order() as i64;
        let fail = |m: String| Err(Error::VerificationFailure(m));

        if self.values.iter().any(|row| row.len() != k) {
            return fail("table is not square".into());
        }
        for (r, row) in self.values.iter().enumerate() {
            if row[0] != Cyclotomic::integer(self.degrees[r] as i64, self.conductor)
                || self.degrees[r] == 0
            {
                return fail(format!("row {r}: identity value is not its degree"));
            }
        }
        if self.degrees.windows(2).any(|w| w[0] > w[1]) {
            return fail("degrees not sorted".into());
        }
        let sum_sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum_sq != order as u64 {
            return fail(format!("sum of squared degrees {sum_sq} ≠ |G| = {order}"));
        }

        let conjugates: Vec<Vec<Cyclotomic>> = self
            .values
            .par_iter()
            .map(|row| row.iter().map(Cyclotomic::conjugate).collect())
            .collect();
        for r in 0..k {
            for c in 0..k {
                if self.values[r][self.conj.inverse_class(c)] != conjugates[r][c] {
                    return fail(format!(
                        "row {r}: value at inverse of class {c} is not the conjugate"
                    ));
                }
            }
        }

        let n = self.conductor;
        let row_failure = (0..k).into_par_iter().find_map_any(|r| {
            (r..k).find_map(|s| {
                let mut acc = Cyclotomic::zero(n);
                for c in 0..k {
                    let term = &self.values[r][c] * &conjugates[s][c];
                    acc = &acc + &term.scale(&Rational::integer(self.conj.size(c) as i64));
                }
                let expected = if r == s { order } else { 0 };
                (acc != Cyclotomic::integer(expected, n))
                    .then(|| format!("rows {r},{s}: inner product {acc}, expected {expected}"))
            })
        });
        if let Some(m) = row_failure {
            return fail(m);
        }

        let col_failure = (0..k).into_par_iter().find_map_any(|a| {
            (a..k).find_map(|b| {
                let mut acc = Cyclotomic::zero(n);
                for r in 0..k {
                    acc = &acc + &(&self.values[r][a] * &conjugates[r][b]);
                }
                let expected = if a == b {
                    order / self.conj.size(a) as i64
                } else {
                    0
                };
                (acc != Cyclotomic::integer(expected, n))
                    .then(|| format!("columns {a},{b}: sum {acc}, expected {expected}"))
            })
        });
        match col_failure {
            Some(m) => fail(m),
            None => Ok(()),
        }
    }

    pub fn cd_set(&self) -> BTreeSet<u64> {
        self.degrees.iter().copied().collect()
    }

    pub fn cv_set(&self) -> BTreeSet<Cyclotomic> {
        self.values.iter().flatten().cloned().collect()
    }

    /// Classes on which row `r` takes its degree.
    pub fn kernel(&self, r: usize) -> Vec<usize> {
        (0..self.num_classes())
            .filter(|&c| self.values[r][c] == self.values[r][0])
            .collect()
    }

    fn class_set_order(&self, classes: &[usize]) -> usize {
        classes.iter().map(|&c| self.conj.size(c)).sum()
    }

    /// All normal subgroups, generated as intersections of row kernels.
    /// Sorted by order, then class list.
    pub fn kernels_and_normals(&self) -> Vec<NormalSubgroup> {
        let mut found: BTreeSet<Vec<usize>> =
            (0..self.num_classes()).map(|r| self.kernel(r)).collect();
        loop {
            let current: Vec<Vec<usize>> = found.iter().cloned().collect();
            let mut added = false;
            for (i, a) in current.iter().enumerate() {
                for b in &current[i + 1..] {
                    let meet: Vec<usize> = a.iter().filter(|c| b.contains(c)).copied().collect();
                    added |= found.insert(meet);
                }
            }
            if !added {
                break;
            }
        }
        let mut out: Vec<NormalSubgroup> = found
            .into_iter()
            .map(|classes| NormalSubgroup {
                order: self.class_set_order(&classes),
                classes,
            })
            .collect();
        out.sort();
        out
    }

    /// Character values of `G/N`: every value of each row whose kernel
    /// contains `N`.
    pub fn cv_of_quotient(&self, normal: &[usize]) -> Result<BTreeSet<Cyclotomic>> {
        let mut sorted = normal.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if !self
            .kernels_and_normals()
            .iter()
            .any(|n| n.classes == sorted)
        {
            return Err(Error::NotNormal);
        }
        Ok((0..self.num_classes())
            .filter(|&r| {
                sorted
                    .iter()
                    .all(|&c| self.values[r][c] == self.values[r][0])
            })
            .flat_map(|r| self.values[r].iter().cloned())
            .collect())
    }

    /// Restricts row `row` to a subgroup acting on the same points and
    /// decomposes it by exact inner products.
    pub fn restrict_and_decompose(
        &self,
        sub: &PermGroup,
        row: usize,
        budget: usize,
    ) -> Result<Restriction> {
        let degree = self.conj.elements().get(0).degree();
        if sub.degree() != degree {
            return Err(Error::NotSubgroup(format!(
                "subgroup acts on {} points, group on {degree}",
                sub.degree()
            )));
        }
        let sub_conj = sub.conjugacy_data(budget)?;
        if let Some(x) = sub_conj
            .elements()
            .iter()
            .find(|x| !self.conj.elements().contains(x))
        {
            return Err(Error::NotSubgroup(x.to_string()));
        }
        let restricted: Vec<Cyclotomic> = (0..sub_conj.num_classes())
            .map(|c| {
                let big_class = self
                    .conj
                    .class_of(sub_conj.representative(c))
                    .expect("checked membership");
                self.values[row][big_class].clone()
            })
            .collect();
        let sub_table = CharacterTable::from_conjugacy(sub_conj)?;
        let sub_order = Rational::integer(sub_table.group_order() as i64);
        let inv_order = sub_order.recip().expect("nonzero order");

        let mut constituents = Vec::new();
        for t in 0..sub_table.num_classes() {
            let mut acc = Cyclotomic::zero(1);
            for (c, value) in restricted.iter().enumerate() {
                let term = value * &sub_table.values[t][c].conjugate();
                acc = &acc + &term.scale(&Rational::integer(sub_table.conj.size(c) as i64));
            }
            let mult = acc.scale(&inv_order);
            let m = mult.to_integer().filter(|&m| m >= 0).ok_or_else(|| {
                Error::VerificationFailure(format!("inner product with constituent {t} is {mult}"))
            })?;
            if m > 0 {
                constituents.push((t, m as u64));
            }
        }
        let total: u64 = constituents
            .iter()
            .map(|&(t, m)| m * sub_table.degrees[t])
            .sum();
        if total != self.degrees[row] {
            return Err(Error::VerificationFailure(format!(
                "constituent degrees sum to {total}, restricted degree is {}",
                self.degrees[row]
            )));
        }
        Ok(Restriction {
            sub_table,
            restricted,
            constituents,
        })
    }

    /// Class sizes, element orders and rows, for matching against other
    /// tables.
    pub fn shape(&self) -> TableShape {
        TableShape {
            sizes: self.conj.classes().iter().map(|c| c.size).collect(),
            orders: self.conj.classes().iter().map(|c| c.order).collect(),
            rows: self.values.clone(),
        }
    }

    /// Whether column `class` has an entry of negative real part; `None`
    /// if some sign could not be certified and none was found negative.
    pub fn column_has_negative_real_part(&self, class: usize) -> Option<bool> {
        let mut undecided = false;
        for row in &self.values {
            match row[class].real_part_sign() {
                Some(Ordering::Less) => return Some(true),
                Some(_) => {}
                None => undecided = true,
            }
        }
        if undecided {
            None
        } else {
            Some(false)
        }
    }

    /// `Σ_r χ_r(1)·χ_r(g_k)`.
    pub fn degree_weighted_column_sum(&self, class: usize) -> Cyclotomic {
        self.values
            .iter()
            .fold(Cyclotomic::zero(self.conductor), |acc, row| {
                &acc + &row[class].scale(&Rational::integer(
                    row[0].to_integer().expect("integer degree"),
                ))
            })
    }
}

fn letter_suffix(mut idx: usize) -> String {
    let mut s = String::new();
    loop {
        s.insert(0, (b'a' + (idx % 26) as u8) as char);
        if idx < 26 {
            break;
        }
        idx = idx / 26 - 1;
    }
    s
}
