//! Concrete Hopf algebras: group algebras and Sweedler's four-dimensional algebra.

use crate::error::{HccError, Result};
use crate::linear::{rat, Matrix, VectorSpace};

use super::algebra::HopfAlgebra;

/// Multiplication table of a finite group, `table[i][j] = g_i g_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl Group {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(HccError::NotAGroup("empty table".into()));
        }
        if labels.len() != n {
            return Err(HccError::NotAGroup(format!(
                "{} labels for a table of order {n}",
                labels.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(HccError::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(HccError::NotAGroup(format!("closure: entry {bad} in row {i}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(HccError::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| HccError::NotAGroup("identity: no two-sided identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| HccError::NotAGroup(format!("inverse: {} has none", labels[g])))?;
            inverse.push(inv);
        }
        Ok(Group {
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn cyclic(n: usize) -> Group {
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_table(labels, table).expect("cyclic group table")
    }

    /// Permutations of three letters.
    pub fn symmetric3() -> Group {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
            .map(String::from)
            .to_vec();
        // (p q)(x) = p(q(x))
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq = [p[q[0]], p[q[1]], p[q[2]]];
                        perms.iter().position(|r| *r == pq).unwrap()
                    })
                    .collect()
            })
            .collect();
        Group::from_table(labels, table).expect("S3 table")
    }

    pub fn hopf_algebra(&self, name: &str) -> HopfAlgebra {
        let n = self.order();
        let mut mul = Vec::new();
        let mut comul = Vec::new();
        let mut anti = Vec::new();
        for a in 0..n {
            for b in 0..n {
                mul.push((self.table[a][b], a * n + b, rat(1)));
            }
            comul.push((a * n + a, a, rat(1)));
            anti.push((self.inverse[a], a, rat(1)));
        }
        let antipode = Matrix::from_entries(n, n, anti);
        HopfAlgebra {
            name: name.to_string(),
            space: VectorSpace::new(self.labels.clone()),
            mul: Matrix::from_entries(n, n * n, mul),
            unit: Matrix::from_entries(n, 1, vec![(self.identity, 0, rat(1))]),
            comul: Matrix::from_entries(n * n, n, comul),
            counit: Matrix::from_entries(1, n, (0..n).map(|a| (0, a, rat(1)))),
            antipode_inv: antipode.clone(),
            antipode,
        }
    }
}

/// The one-dimensional Hopf algebra `Q`.
pub fn trivial_hopf() -> HopfAlgebra {
    let id = Matrix::identity(1);
    HopfAlgebra {
        name: "trivial".into(),
        space: VectorSpace::ground(),
        mul: id.clone(),
        unit: id.clone(),
        comul: id.clone(),
        counit: id.clone(),
        antipode: id.clone(),
        antipode_inv: id,
    }
}

pub fn group_algebra(labels: Vec<String>, table: Vec<Vec<usize>>, name: &str) -> Result<HopfAlgebra> {
    Ok(Group::from_table(labels, table)?.hopf_algebra(name))
}

pub fn group_algebra_cyclic(n: usize) -> HopfAlgebra {
    Group::cyclic(n).hopf_algebra(&format!("Q[Z{n}]"))
}

pub fn group_algebra_s3() -> HopfAlgebra {
    Group::symmetric3().hopf_algebra("Q[S3]")
}

/// Sweedler's algebra with basis `1, g, x, gx`, `g^2 = 1`, `x^2 = 0`, `xg = -gx`.
pub fn sweedler_h4() -> HopfAlgebra {
    // basis index = a + 2b for g^a x^b
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mul = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b + d >= 2 {
                        continue;
                    }
                    let sign = if b * c == 1 { -1 } else { 1 };
                    mul.push((idx((a + c) % 2, b + d), idx(a, b) * 4 + idx(c, d), rat(sign)));
                }
            }
        }
    }
    // Delta(1) = 1(x)1, Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x, Delta(gx) = gx(x)g + 1(x)gx
    let t = |i: usize, j: usize| i * 4 + j;
    let comul = vec![
        (t(0, 0), 0, rat(1)),
        (t(1, 1), 1, rat(1)),
        (t(2, 0), 2, rat(1)),
        (t(1, 2), 2, rat(1)),
        (t(3, 1), 3, rat(1)),
        (t(0, 3), 3, rat(1)),
    ];
    // S(g) = g, S(x) = -gx, S(gx) = x; S^-1(x) = gx, S^-1(gx) = -x
    let antipode = Matrix::from_entries(
        4,
        4,
        vec![(0, 0, rat(1)), (1, 1, rat(1)), (3, 2, rat(-1)), (2, 3, rat(1))],
    );
    let antipode_inv = Matrix::from_entries(
        4,
        4,
        vec![(0, 0, rat(1)), (1, 1, rat(1)), (3, 2, rat(1)), (2, 3, rat(-1))],
    );
    HopfAlgebra {
        name: "sweedler4".into(),
        space: VectorSpace::new(["1", "g", "x", "gx"]),
        mul: Matrix::from_entries(4, 16, mul),
        unit: Matrix::from_entries(4, 1, vec![(0, 0, rat(1))]),
        comul: Matrix::from_entries(16, 4, comul),
        counit: Matrix::from_entries(1, 4, vec![(0, 0, rat(1)), (0, 1, rat(1))]),
        antipode,
        antipode_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_satisfy_axioms() {
        for h in [
            trivial_hopf(),
            group_algebra_cyclic(2),
            group_algebra_cyclic(3),
            group_algebra_s3(),
            sweedler_h4(),
        ] {
            let r = h.check_axioms();
            assert!(r.all_passed(), "{}", r.render_text());
        }
    }

    #[test]
    fn sweedler_square_of_antipode_is_not_identity() {
        let h = sweedler_h4();
        assert!(!h.antipode.mul(&h.antipode).is_identity());
        assert!(h.antipode.pow(4).is_identity());
    }

    #[test]
    fn broken_table_names_axiom() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let err = group_algebra(labels.clone(), vec![vec![0, 0], vec![0, 0]], "bad").unwrap_err();
        assert!(err.to_string().contains("identity"), "{err}");
        let err = group_algebra(labels, vec![vec![0, 2], vec![1, 0]], "bad").unwrap_err();
        assert!(err.to_string().contains("closure"), "{err}");
    }

    #[test]
    fn corrupted_antipode_fails_with_location() {
        let mut h = group_algebra_cyclic(3);
        h.antipode = Matrix::identity(3);
        let r = h.check_axioms();
        assert!(!r.passed("left antipode"));
        assert!(r.check("left antipode").unwrap().violation.is_some());
    }

    #[test]
    fn s3_is_noncommutative() {
        let g = Group::symmetric3();
        assert_ne!(g.table[1][4], g.table[4][1]);
    }
}
