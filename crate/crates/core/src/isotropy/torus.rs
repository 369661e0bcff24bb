//! Exact isotropy of torus actions on sums of weighted complex lines.
//!
//! For a torus acting on `C_1 + ... + C_m` with integer weights `w_s`, the
//! isotropy group at `p` is `{t : <w_s, t> in Z for s in supp(p)}`. It acts
//! trivially on `C_s` iff `w_s` lies in the integer span of the weights on
//! the support (the annihilator of the annihilator of a subgroup of the
//! character lattice is the subgroup itself). This sees finite isotropy
//! groups, which are invisible to the Lie algebra.

use std::ops::Range;

use crate::liealg::{FactorKind, Field, LieGroupRep};
use crate::Vector;

/// Coordinates below this norm are treated as outside the support.
const SUPPORT_TOL: f64 = 1e-6;

/// Weighted lines `(coordinates, weight vector)` if `rep` is a torus acting
/// on a sum of complex lines.
pub(crate) fn torus_lines(rep: &LieGroupRep) -> Option<Vec<(Range<usize>, Vec<i64>)>> {
    let spec = rep.spec()?;
    if spec.factors.iter().any(|f| f.kind != FactorKind::Torus) {
        return None;
    }
    let offsets: Vec<usize> = spec
        .factors
        .iter()
        .scan(0, |acc, f| {
            let start = *acc;
            *acc += f.n;
            Some(start)
        })
        .collect();
    let rank: usize = spec.factors.iter().map(|f| f.n).sum();
    let mut lines = Vec::with_capacity(spec.summands.len());
    for (summand, range) in spec.summands.iter().zip(rep.summand_ranges()) {
        if summand.field != Field::Complex || range.len() != 2 {
            return None;
        }
        let mut w = vec![0i64; rank];
        for letter in &summand.word {
            let lw = letter.weights.as_ref()?;
            for (k, x) in lw.iter().enumerate() {
                w[offsets[letter.factor] + k] += x;
            }
        }
        lines.push((range.clone(), w));
    }
    Some(lines)
}

/// Whether `w` lies in the integer span of `gens`.
pub(crate) fn lattice_contains(gens: &[Vec<i64>], w: &[i64]) -> bool {
    let cols = w.len();
    let mut rows: Vec<Vec<i128>> = gens.iter().map(|g| g.iter().map(|&x| x as i128).collect()).collect();
    let mut pivots: Vec<(usize, Vec<i128>)> = Vec::new();
    for c in 0..cols {
        loop {
            let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][c] != 0).collect();
            if nonzero.len() <= 1 {
                if let Some(&i) = nonzero.first() {
                    pivots.push((c, rows.remove(i)));
                }
                break;
            }
            let &best = nonzero.iter().min_by_key(|&&i| rows[i][c].abs()).expect("nonempty");
            let pivot = rows[best].clone();
            for &i in &nonzero {
                if i != best {
                    let q = rows[i][c] / pivot[c];
                    for k in 0..cols {
                        rows[i][k] -= q * pivot[k];
                    }
                }
            }
        }
    }
    let mut r: Vec<i128> = w.iter().map(|&x| x as i128).collect();
    for (c, row) in &pivots {
        if r[*c] % row[*c] != 0 {
            return false;
        }
        let q = r[*c] / row[*c];
        for k in 0..cols {
            r[k] -= q * row[k];
        }
    }
    r.iter().all(|&x| x == 0)
}

/// Coordinates of the lines on which the isotropy group at `p` acts
/// nontrivially.
pub(crate) fn moved_lines(lines: &[(Range<usize>, Vec<i64>)], p: &Vector) -> Vec<Range<usize>> {
    let support = support_weights(lines, p);
    lines.iter().filter(|(_, w)| !lattice_contains(&support, w)).map(|(r, _)| r.clone()).collect()
}

fn support_weights(lines: &[(Range<usize>, Vec<i64>)], p: &Vector) -> Vec<Vec<i64>> {
    lines.iter().filter(|(r, _)| p.rows(r.start, r.len()).norm() > SUPPORT_TOL).map(|(_, w)| w.clone()).collect()
}

/// Dimension of the slice subspace fixed by the full isotropy group.
pub(crate) fn group_fixed_dim(lines: &[(Range<usize>, Vec<i64>)], p: &Vector, orbit_dim: usize) -> usize {
    let support = support_weights(lines, p);
    let fixed_lines = lines.iter().filter(|(_, w)| lattice_contains(&support, w)).count();
    (2 * fixed_lines).saturating_sub(1 + orbit_dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_membership() {
        assert!(lattice_contains(&[vec![1]], &[2]));
        assert!(!lattice_contains(&[vec![2]], &[1]));
        assert!(!lattice_contains(&[vec![1, 1], vec![1, -1]], &[1, 0]));
        assert!(lattice_contains(&[vec![1, 1], vec![1, -1]], &[2, 0]));
        assert!(lattice_contains(&[vec![1, 0], vec![0, 1]], &[-1, -1]));
        assert!(!lattice_contains(&[], &[1, 0]));
        assert!(lattice_contains(&[vec![4, 6], vec![6, 9]], &[2, 3]));
    }

    #[test]
    fn weight_two_axis_has_finite_isotropy() {
        let lines = vec![(0..2, vec![1]), (2..4, vec![2])];
        let on_two = Vector::from_vec(vec![0.0, 0.0, 1.0, 0.0]);
        assert_eq!(group_fixed_dim(&lines, &on_two, 1), 0);
        let on_one = Vector::from_vec(vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(group_fixed_dim(&lines, &on_one, 1), 2);
    }
}
