use num_bigint::BigInt;
use num_traits::One;

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
///
/// Uses the multiplicative formula `C(n, i+1) = C(n, i) (n - i) / (i + 1)`;
/// every intermediate value is itself a binomial coefficient, so each
/// division is exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient with an arbitrary integer upper argument,
/// `C(n, k) = n (n-1) ... (n-k+1) / k!`.
pub fn binomial_signed(n: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n) - BigInt::from(i);
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal_row(n: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for j in 1..row.len() {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        row
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        for n in 0..20 {
            assert_eq!(binomial(n, 0), BigInt::from(1));
        }
    }

    #[test]
    fn matches_pascal_triangle() {
        let row = pascal_row(63);
        assert_eq!(row[31], "916312070471295267".parse::<BigInt>().unwrap());
        assert_eq!(binomial(63, 31), row[31]);
        for (k, v) in row.iter().enumerate() {
            assert_eq!(&binomial(63, k as u64), v);
        }
    }

    #[test]
    fn pascal_recurrence_up_to_64() {
        for n in 1..=64u64 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn negative_upper_argument() {
        // C(-1, k) = (-1)^k, C(-2, k) = (-1)^k (k+1)
        assert_eq!(binomial_signed(-1, 5), BigInt::from(-1));
        assert_eq!(binomial_signed(-2, 3), BigInt::from(-4));
        assert_eq!(binomial_signed(-5, 2), BigInt::from(15));
        assert_eq!(binomial_signed(10, 4), binomial(10, 4));
        assert_eq!(binomial_signed(3, 5), BigInt::from(0));
    }
}
