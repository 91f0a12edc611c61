//! Decoding radii as exact rationals, and parameter selection.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

/// Largest `l` considered when `k = 1`, where the admissibility bound
/// `l (k - 1) < s n` is vacuous.
pub const DEFAULT_POWER_CEILING: usize = 64;

fn small<T: Integer + Clone>(v: u32) -> T {
    (0..v).fold(T::zero(), |acc, _| acc + T::one())
}

/// `(2l - s + 1) / (2(l + 1)) * n - l / (2s) * (k - 1) - l / (s(l + 1))`.
pub fn tau_pow<T>(s: T, l: T, n: T, k: T) -> Ratio<T>
where
    T: Integer + Signed + Clone,
{
    let one = T::one();
    let two: T = small(2);
    let main = Ratio::new(
        (two.clone() * l.clone() - s.clone() + one.clone()) * n,
        two.clone() * (l.clone() + one.clone()),
    );
    let slope = Ratio::new(l.clone() * (k - one.clone()), two * s.clone());
    main - slope - gap(s, l)
}

/// `tau_pow + l / (s(l + 1))`.
pub fn tau_gs<T>(s: T, l: T, n: T, k: T) -> Ratio<T>
where
    T: Integer + Signed + Clone,
{
    tau_pow(s.clone(), l.clone(), n, k) + gap(s, l)
}

/// `tau_gs - tau_pow = l / (s(l + 1))`.
pub fn gap<T>(s: T, l: T) -> Ratio<T>
where
    T: Integer + Signed + Clone,
{
    Ratio::new(l.clone(), s * (l + T::one()))
}

pub fn tau_floor<T>(s: T, l: T, n: T, k: T) -> T
where
    T: Integer + Signed + Clone,
{
    tau_pow(s, l, n, k).floor().to_integer()
}

/// `1 <= s <= l` and `l (k - 1) < s n`; for `k = 1` the second condition is
/// replaced by `l <= ceiling`.
pub fn params_admissible(s: usize, l: usize, n: usize, k: usize, ceiling: usize) -> bool {
    if s == 0 || l < s {
        return false;
    }
    if k <= 1 {
        l <= ceiling
    } else {
        l * (k - 1) < s * n
    }
}

/// Smallest `s`, then smallest `l`, that is admissible and whose floored
/// radius reaches `target`.
pub fn choose_params(
    n: usize,
    k: usize,
    target: i64,
    max_s: usize,
    max_l: usize,
) -> Option<(usize, usize)> {
    (1..=max_s).find_map(|s| {
        (s..=max_l)
            .filter(|&l| params_admissible(s, l, n, k, max_l))
            .find(|&l| tau_floor(s as i64, l as i64, n as i64, k as i64) >= target)
            .map(|l| (s, l))
    })
}
