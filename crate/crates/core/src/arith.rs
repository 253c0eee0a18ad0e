pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totient_small() {
        let got: Vec<usize> = (1..=12).map(totient).collect();
        assert_eq!(got, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn primes() {
        let got: Vec<usize> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(got, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
