//! Exact matrix rank over `Q` and over prime fields.

use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};

/// Dense integer matrix, row-major.
pub(crate) type IntMatrix = Vec<Vec<i64>>;

/// Rank over `GF(p)` or, for `p = 0`, over `Q`.
pub(crate) fn rank(matrix: &IntMatrix, characteristic: u32) -> usize {
    if matrix.is_empty() || matrix[0].is_empty() {
        return 0;
    }
    if characteristic == 0 {
        rank_rational(matrix)
    } else {
        rank_mod_p(matrix, characteristic as u64)
    }
}

fn rank_mod_p(matrix: &IntMatrix, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let (rows, cols) = (m.len(), m[0].len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for v in &mut m[rank][col..] {
            *v = *v * inv % p;
        }
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (v, &q) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *v = (*v + (p - factor) * q) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_rational(matrix: &IntMatrix) -> usize {
    let wide: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    match bareiss_rank_i128(wide) {
        Some(r) => r,
        None => bareiss_rank_big(
            matrix
                .iter()
                .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        ),
    }
}

/// Fraction-free (Bareiss) elimination. After the step with pivot rows
/// `r_1..r_k` and columns `c_1..c_k`, every remaining entry is the minor on
/// those rows and columns plus its own row and column, so the division by
/// the previous pivot is exact. Returns `None` on `i128` overflow.
fn bareiss_rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let (rows, cols) = (m.len(), m[0].len());
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col];
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let lead = row[col];
            for (v, &q) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                *v = p.checked_mul(*v)?.checked_sub(lead.checked_mul(q)?)? / prev;
            }
            row[col] = 0;
        }
        prev = p;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let (rows, cols) = (m.len(), m[0].len());
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col].sign() != Sign::NoSign) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            let lead = row[col].clone();
            for (v, q) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                *v = (&p * &*v - &lead * q) / &prev;
            }
            row[col] = BigInt::from(0);
        }
        prev = p;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(rank(&m, 0), 1);
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&m, 0), 2);
        assert_eq!(rank(&m, 2), 1);
        assert_eq!(rank(&m, 3), 2);
        assert_eq!(rank(&vec![], 0), 0);
        assert_eq!(rank(&vec![vec![0, 0, 0]], 5), 0);
    }

    #[test]
    fn big_fallback_agrees() {
        let m: Vec<Vec<i64>> = vec![vec![3, 1, 4, 1], vec![5, 9, 2, 6], vec![5, 3, 5, 8], vec![8, 10, 6, 7]];
        let big = bareiss_rank_big(m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect());
        assert_eq!(big, rank(&m, 0));
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let huge = i64::MAX;
        let m = vec![
            vec![huge, huge - 1, 3],
            vec![huge - 2, huge, 5],
            vec![7, huge, huge - 3],
        ];
        assert!(bareiss_rank_i128(m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect()).is_none());
        assert_eq!(rank(&m, 0), 3);
    }
}
