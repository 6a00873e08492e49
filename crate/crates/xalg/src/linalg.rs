//! Row reduction and linear solving over a [`FieldSpec`], on dense
//! coordinate-vector rows. Dimensions in this crate never exceed a couple
//! dozen, so everything is plain Gaussian elimination to reduced echelon
//! form, which doubles as the canonical form for subspace equality.

use crate::ffield::{FieldSpec, Scalar};

/// Reduced row echelon form, in place; returns pivot column per row.
pub fn rref(field: &FieldSpec, rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][c]).expect("pivot nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                for j in 0..ncols {
                    let t = field.mul(factor, rows[r][j]);
                    rows[i][j] = field.sub(rows[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|&x| x != 0));
    pivots.truncate(rows.len());
    pivots
}

/// Expresses `v` in terms of echelonized `basis` rows (with `pivots` from
/// [`rref`]); returns the coefficient vector, or `None` if `v` is outside
/// the span.
pub fn coords_in_span(
    field: &FieldSpec,
    basis: &[Vec<Scalar>],
    pivots: &[usize],
    v: &[Scalar],
) -> Option<Vec<Scalar>> {
    let mut rem = v.to_vec();
    let mut coeffs = vec![0 as Scalar; basis.len()];
    for (i, &p) in pivots.iter().enumerate() {
        let c = rem[p];
        if c != 0 {
            coeffs[i] = c;
            for j in 0..rem.len() {
                let t = field.mul(c, basis[i][j]);
                rem[j] = field.sub(rem[j], t);
            }
        }
    }
    if rem.iter().all(|&x| x == 0) {
        Some(coeffs)
    } else {
        None
    }
}

/// Nullspace of the matrix given as a list of rows (each row one linear
/// equation over the unknowns); returned as canonical rref basis rows.
pub fn nullspace(
    field: &FieldSpec,
    equations: &[Vec<Scalar>],
    nunknowns: usize,
) -> Vec<Vec<Scalar>> {
    let mut rows: Vec<Vec<Scalar>> = equations.to_vec();
    let pivots = rref(field, &mut rows);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..nunknowns {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0 as Scalar; nunknowns];
        v[free] = 1;
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = field.neg(rows[i][free]);
        }
        basis.push(v);
    }
    rref(field, &mut basis);
    basis
}

/// Solves `M x = b` where the matrix is given column-wise (`cols[j]` is the
/// j-th column); returns one solution if any.
pub fn solve_columns(field: &FieldSpec, cols: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let nrows = b.len();
    let ncols = cols.len();
    // augment: rows of [M | b]
    let mut rows: Vec<Vec<Scalar>> = (0..nrows)
        .map(|i| {
            let mut row: Vec<Scalar> = cols.iter().map(|c| c[i]).collect();
            row.push(b[i]);
            row
        })
        .collect();
    let pivots = rref(field, &mut rows);
    let mut x = vec![0 as Scalar; ncols];
    for (i, &p) in pivots.iter().enumerate() {
        if p == ncols {
            return None; // inconsistent
        }
        x[p] = rows[i][ncols];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldSpec;

    #[test]
    fn rref_canonicalizes() {
        let f = FieldSpec::make(3, 1).unwrap();
        let mut a = vec![vec![1, 2, 0], vec![2, 1, 0]];
        let mut b = vec![vec![2, 1, 0], vec![0, 1, 1]];
        // same span written differently: {(1,2,0),(2,1,0)} spans x,y plane?
        // (1,2,0)+(2,1,0)=(0,0,0) mod 3 — dependent. Use independent pairs.
        let mut c = vec![vec![1, 2, 0], vec![0, 1, 1]];
        rref(&f, &mut a);
        rref(&f, &mut b);
        rref(&f, &mut c);
        assert_eq!(a.len(), 1);
        assert_eq!(b, c);
    }

    #[test]
    fn nullspace_of_sum_map() {
        // kernel of (a,b) -> a+b over GF(2): span{(1,1)}
        let f = FieldSpec::make(2, 1).unwrap();
        let ns = nullspace(&f, &[vec![1, 1]], 2);
        assert_eq!(ns, vec![vec![1, 1]]);
    }

    #[test]
    fn solve_simple() {
        let f = FieldSpec::make(5, 1).unwrap();
        // columns of the 2x2 matrix [[1,2],[3,4]]
        let cols = vec![vec![1, 3], vec![2, 4]];
        let x = solve_columns(&f, &cols, &[0, 2]).unwrap();
        // check M x = b
        let m0 = f.add(f.mul(1, x[0]), f.mul(2, x[1]));
        let m1 = f.add(f.mul(3, x[0]), f.mul(4, x[1]));
        assert_eq!((m0, m1), (0, 2));
    }
}
