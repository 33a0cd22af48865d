use crate::error::{Error, Result};

use super::{Structure, TwistedVirtualBirack};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    (1..m).find(|&k| a * k % m == 1).or((m == 1).then_some(0))
}

/// The linear structure on `Z_m` with `B(x,y) = (ty, rx)`, `V(x,y) = (vy, v⁻¹x)`
/// and `T(x) = Tc·x`. Element `x_i` is the residue `i − 1`.
///
/// Requires `t, r, v, Tc` to be units, `v²r ≡ t` and `Tc² ≡ 1`.
pub fn tsr_construct(m: u64, t: u64, r: u64, v: u64, tc: u64) -> Result<TwistedVirtualBirack> {
    if m < 2 {
        return Err(Error::ParameterCondition(format!(
            "modulus m = {m} must be at least 2"
        )));
    }
    let (t, r, v, tc) = (t % m, r % m, v % m, tc % m);
    for (name, value) in [("t", t), ("r", r), ("v", v), ("T", tc)] {
        if gcd(value, m) != 1 {
            return Err(Error::ParameterCondition(format!(
                "{name} = {value} is not a unit mod {m}"
            )));
        }
    }
    if v * v % m * r % m != t {
        return Err(Error::ParameterCondition(format!(
            "v^2 r = t fails: v^2 r = {} but t = {t} (mod {m})",
            v * v % m * r % m
        )));
    }
    if tc * tc % m != 1 {
        return Err(Error::ParameterCondition(format!(
            "T^2 = 1 fails: T^2 = {} (mod {m})",
            tc * tc % m
        )));
    }
    let v_inv = inverse_mod(v, m).expect("v is a unit");
    let n = m as usize;
    let mul = move |c: u64, x: usize| (c * x as u64 % m) as usize;
    let s = Structure::from_fns(
        n,
        |x, y| (mul(t, y), mul(r, x)),
        |x, y| (mul(v, y), mul(v_inv, x)),
        |x| mul(tc, x),
    )?;
    TwistedVirtualBirack::new(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_parameters() {
        let x = tsr_construct(5, 4, 1, 2, 4).unwrap();
        assert_eq!(x.order(), 5);
        assert_eq!(x.b(1, 2), (3, 1));
        assert_eq!(x.v(1, 2), (4, 3));
        assert_eq!(x.t(2), 3);
    }

    #[test]
    fn all_ones_gives_trivial_swap() {
        let x = tsr_construct(2, 1, 1, 1, 1).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(x.b(a, b), (b, a));
                assert_eq!(x.v(a, b), (b, a));
            }
            assert_eq!(x.t(a), a);
        }
    }

    #[test]
    fn condition_errors_name_the_condition() {
        let err = tsr_construct(5, 3, 1, 2, 4).unwrap_err();
        assert!(err.to_string().contains("v^2 r = t"), "{err}");
        let err = tsr_construct(5, 4, 1, 2, 2).unwrap_err();
        assert!(err.to_string().contains("T^2 = 1"), "{err}");
        let err = tsr_construct(6, 2, 1, 1, 1).unwrap_err();
        assert!(err.to_string().contains("not a unit"), "{err}");
        assert!(tsr_construct(1, 0, 0, 0, 0).is_err());
    }
}
