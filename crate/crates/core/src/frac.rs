use core::cmp::Ordering;
use core::fmt;

/// Reduced fraction over i64. Only the handful of exact rational values the
/// automaton geometry needs (centres, the K_p constant); not a general
/// rational type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frac {
    num: i64,
    den: i64, // always > 0
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Frac {
    pub fn new(num: i64, den: i64) -> Frac {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Frac {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn integer(n: i64) -> Frac {
        Frac { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn abs(&self) -> Frac {
        Frac {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn sub_int(&self, n: i64) -> Frac {
        Frac::new(self.num - n * self.den, self.den)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn min(self, other: Frac) -> Frac {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Frac) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Frac) -> Ordering {
        // denominators are positive and small here; i128 avoids overflow
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_order() {
        assert_eq!(Frac::new(2, 4), Frac::new(1, 2));
        assert_eq!(Frac::new(1, -2), Frac::new(-1, 2));
        assert!(Frac::new(1, 12) < Frac::new(5, 16));
        assert!(Frac::new(5, 16) < Frac::new(1, 2));
        assert_eq!(Frac::new(25, 5).to_f64(), 5.0);
    }
}
