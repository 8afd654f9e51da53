use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::binomial;
use crate::error::{Error, Result};

/// Triangle of Eulerian numbers. Row `n` (1-based) holds `E_{0,n} .. E_{n-1,n}`,
/// the number of permutations of `n` letters with `j` ascents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianTable {
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTable {
    /// Rows `1..=n`, each built from the previous one.
    pub fn build(n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("Eulerian table needs n >= 1".into()));
        }
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for m in 1..n as usize {
            rows.push(next_row(&rows[m - 1]));
        }
        Ok(EulerianTable { rows })
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// Row `n`, 1-based.
    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        n.checked_sub(1)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    pub fn get(&self, j: usize, n: usize) -> Option<&BigInt> {
        self.row(n).and_then(|r| r.get(j))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().map(Vec::as_slice)
    }
}

// E_{j,n+1} = (n - j + 1) E_{j-1,n} + (j + 1) E_{j,n}, with out-of-range
// entries read as zero.
fn next_row(prev: &[BigInt]) -> Vec<BigInt> {
    let n = prev.len();
    let zero = BigInt::zero();
    (0..=n)
        .map(|j| {
            let left = if j >= 1 { &prev[j - 1] } else { &zero };
            let here = prev.get(j).unwrap_or(&zero);
            left * BigInt::from(n - j + 1) + here * BigInt::from(j + 1)
        })
        .collect()
}

/// Row `n` of the Eulerian triangle by the three-term recurrence.
pub fn eulerian_recurrence(n: u32) -> Result<Vec<BigInt>> {
    let table = EulerianTable::build(n)?;
    Ok(table.rows.into_iter().last().unwrap_or_default())
}

/// `E_{j,n} = sum_{k=0}^{j+1} (-1)^k C(n+1, k) (j + 1 - k)^n`.
pub fn eulerian_explicit(j: u32, n: u32) -> Result<BigInt> {
    if n < 1 || j >= n {
        return Err(Error::InvalidArgument(format!(
            "Eulerian number E(j={j}, n={n}) needs 0 <= j <= n - 1"
        )));
    }
    let mut acc = BigInt::zero();
    for k in 0..=j + 1 {
        let term = binomial(n as u64 + 1, k as i64) * BigInt::from(j + 1 - k).pow(n);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_rows() {
        assert_eq!(eulerian_recurrence(1).unwrap(), ints(&[1]));
        assert_eq!(eulerian_recurrence(3).unwrap(), ints(&[1, 4, 1]));
        assert_eq!(eulerian_recurrence(4).unwrap(), ints(&[1, 11, 11, 1]));
        assert_eq!(eulerian_recurrence(5).unwrap(), ints(&[1, 26, 66, 26, 1]));
    }

    #[test]
    fn explicit_values() {
        assert_eq!(eulerian_explicit(0, 1).unwrap(), BigInt::one());
        assert_eq!(eulerian_explicit(1, 3).unwrap(), BigInt::from(4));
        assert_eq!(eulerian_explicit(2, 4).unwrap(), BigInt::from(11));
        assert!(eulerian_explicit(3, 3).is_err());
        assert!(eulerian_explicit(0, 0).is_err());
    }

    #[test]
    fn table_lookup() {
        let t = EulerianTable::build(6).unwrap();
        assert_eq!(t.n_rows(), 6);
        assert_eq!(t.get(2, 5), Some(&BigInt::from(66)));
        assert_eq!(t.row(0), None);
        assert_eq!(t.row(7), None);
        assert!(EulerianTable::build(0).is_err());
    }
}
