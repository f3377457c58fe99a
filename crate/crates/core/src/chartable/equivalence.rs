//! Matching two character tables up to row and column permutations.
//!
//! This is not an isomorphism test. Columns are matched by class size,
//! element order and column value multiset; rows are then compared as
//! multisets under the chosen column bijection.

use num_integer::Integer;

use crate::cyclotomic::Cyclotomic;

/// The data needed to compare tables: class sizes, element orders and the
/// value matrix (rows are characters).
#[derive(Clone, Debug)]
pub struct TableShape {
    pub sizes: Vec<usize>,
    pub orders: Vec<u64>,
    pub rows: Vec<Vec<Cyclotomic>>,
}

impl TableShape {
    fn embedded(&self, n: u32) -> Vec<Vec<Cyclotomic>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.embed(n).expect("common conductor"))
                    .collect()
            })
            .collect()
    }

    fn conductor_lcm(&self) -> u32 {
        self.rows
            .iter()
            .flatten()
            .fold(1, |acc, v| acc.lcm(&v.conductor()))
    }
}

fn column(rows: &[Vec<Cyclotomic>], j: usize) -> Vec<Cyclotomic> {
    let mut col: Vec<Cyclotomic> = rows.iter().map(|r| r[j].clone()).collect();
    col.sort();
    col
}

pub fn tables_equivalent(a: &TableShape, b: &TableShape) -> bool {
    let k = a.sizes.len();
    if b.sizes.len() != k
        || a.rows.len() != k
        || b.rows.len() != k
        || a.sizes.iter().sum::<usize>() != b.sizes.iter().sum::<usize>()
    {
        return false;
    }
    let n = a.conductor_lcm().lcm(&b.conductor_lcm());
    let ra = a.embedded(n);
    let rb = b.embedded(n);
    let cols_a: Vec<Vec<Cyclotomic>> = (0..k).map(|j| column(&ra, j)).collect();
    let cols_b: Vec<Vec<Cyclotomic>> = (0..k).map(|j| column(&rb, j)).collect();
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|j| {
            (0..k)
                .filter(|&t| {
                    a.sizes[j] == b.sizes[t] && a.orders[j] == b.orders[t] && cols_a[j] == cols_b[t]
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return false;
    }
    let mut sorted_b = rb.clone();
    sorted_b.sort();
    let mut assignment = vec![usize::MAX; k];
    let mut used = vec![false; k];
    search(0, &candidates, &mut assignment, &mut used, &ra, &sorted_b)
}

fn search(
    j: usize,
    candidates: &[Vec<usize>],
    assignment: &mut [usize],
    used: &mut [bool],
    ra: &[Vec<Cyclotomic>],
    sorted_b: &[Vec<Cyclotomic>],
) -> bool {
    if j == candidates.len() {
        let mut permuted: Vec<Vec<Cyclotomic>> = ra
            .iter()
            .map(|row| {
                let mut out = vec![Cyclotomic::zero(1); row.len()];
                for (col, v) in row.iter().enumerate() {
                    out[assignment[col]] = v.clone();
                }
                out
            })
            .collect();
        permuted.sort();
        return permuted == sorted_b;
    }
    for &t in &candidates[j] {
        if used[t] {
            continue;
        }
        used[t] = true;
        assignment[j] = t;
        if search(j + 1, candidates, assignment, used, ra, sorted_b) {
            return true;
        }
        used[t] = false;
    }
    false
}
