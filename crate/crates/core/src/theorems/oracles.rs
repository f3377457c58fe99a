//! Hand-entered character tables of small groups.

use crate::chartable::TableShape;
use crate::cyclotomic::Cyclotomic;

pub struct OracleTable {
    pub name: &'static str,
    pub spec: &'static str,
    pub shape: TableShape,
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<Cyclotomic>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| Cyclotomic::integer(v, 1)).collect())
        .collect()
}

// χ_j(g^k) = ζ_n^{jk}
fn cyclic(n: u32) -> TableShape {
    let n64 = n as u64;
    TableShape {
        sizes: vec![1; n as usize],
        orders: (0..n64).map(|k| n64 / num_integer::gcd(n64, k)).collect(),
        rows: (0..n as i64)
            .map(|j| {
                (0..n as i64)
                    .map(|k| Cyclotomic::root_of_unity(n, j * k))
                    .collect()
            })
            .collect(),
    }
}

fn s3() -> TableShape {
    TableShape {
        sizes: vec![1, 3, 2],
        orders: vec![1, 2, 3],
        rows: ints(&[&[1, 1, 1], &[1, -1, 1], &[2, 0, -1]]),
    }
}

fn a4() -> TableShape {
    let one = Cyclotomic::one(3);
    let w = Cyclotomic::root_of_unity(3, 1);
    let w2 = Cyclotomic::root_of_unity(3, 2);
    let int = |k| Cyclotomic::integer(k, 3);
    TableShape {
        sizes: vec![1, 3, 4, 4],
        orders: vec![1, 2, 3, 3],
        rows: vec![
            vec![one.clone(), one.clone(), one.clone(), one.clone()],
            vec![one.clone(), one.clone(), w.clone(), w2.clone()],
            vec![one.clone(), one, w2, w],
            vec![int(3), int(-1), int(0), int(0)],
        ],
    }
}

fn s4() -> TableShape {
    TableShape {
        sizes: vec![1, 6, 3, 8, 6],
        orders: vec![1, 2, 2, 3, 4],
        rows: ints(&[
            &[1, 1, 1, 1, 1],
            &[1, -1, 1, 1, -1],
            &[2, 0, 2, -1, 0],
            &[3, 1, -1, 0, -1],
            &[3, -1, -1, 0, 1],
        ]),
    }
}

// D4 and Q8 share values; element orders tell them apart.
fn order8(orders: Vec<u64>) -> TableShape {
    TableShape {
        sizes: vec![1, 1, 2, 2, 2],
        orders,
        rows: ints(&[
            &[1, 1, 1, 1, 1],
            &[1, 1, 1, -1, -1],
            &[1, 1, -1, 1, -1],
            &[1, 1, -1, -1, 1],
            &[2, -2, 0, 0, 0],
        ]),
    }
}

pub fn oracle_tables() -> Vec<OracleTable> {
    vec![
        OracleTable {
            name: "C2",
            spec: "C(2)",
            shape: cyclic(2),
        },
        OracleTable {
            name: "C3",
            spec: "C(3)",
            shape: cyclic(3),
        },
        OracleTable {
            name: "C4",
            spec: "C(4)",
            shape: cyclic(4),
        },
        OracleTable {
            name: "C6",
            spec: "C(6)",
            shape: cyclic(6),
        },
        OracleTable {
            name: "S3",
            spec: "S(3)",
            shape: s3(),
        },
        OracleTable {
            name: "A4",
            spec: "A(4)",
            shape: a4(),
        },
        OracleTable {
            name: "S4",
            spec: "S(4)",
            shape: s4(),
        },
        OracleTable {
            name: "D4",
            spec: "D(4)",
            shape: order8(vec![1, 2, 4, 2, 2]),
        },
        OracleTable {
            name: "Q8",
            spec: "perm:Q8:(0,1,3,6)(2,5,7,4);(0,2,3,7)(1,4,6,5)",
            shape: order8(vec![1, 2, 4, 4, 4]),
        },
    ]
}
