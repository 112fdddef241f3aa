//! Height-ordered enumeration of rational numbers.
//!
//! Height of a reduced fraction p/q is max(|p|, q). The enumeration order is
//! (height, q, p), which fixes the deterministic scan order used by fiber
//! sweeps and point searches; outputs must be byte-identical across runs, so
//! nothing here may depend on hash iteration or thread scheduling.

use crate::arith::rat::{rat, Rat};
use num_integer::Integer;

/// All reduced p/q with max(|p|, q) <= h, ordered by (height, q, p).
/// Includes 0; `h` of 0 yields nothing.
pub fn rationals_up_to_height(h: u32) -> Vec<Rat> {
    let mut out: Vec<(i64, i64, i64)> = Vec::new(); // (height, q, p)
    let h = h as i64;
    for q in 1..=h {
        for p in -h..=h {
            if p.unsigned_abs().gcd(&(q as u64)) == 1 {
                out.push((p.abs().max(q), q, p));
            }
        }
    }
    out.sort_unstable();
    out.into_iter().map(|(_, q, p)| rat(p, q)).collect()
}

/// Height of a rational as a u64, saturating; convenience for sort keys.
pub fn height_u64(r: &Rat) -> u64 {
    use num_traits::ToPrimitive;
    crate::arith::rat::height(r).to_u64().unwrap_or(u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat_int;

    #[test]
    fn small_prefix_is_exactly_ordered() {
        let rs = rationals_up_to_height(2);
        let expect: Vec<Rat> = vec![
            rat(-1, 1),
            rat(0, 1),
            rat(1, 1),
            rat(-2, 1),
            rat(2, 1),
            rat(-1, 2),
            rat(1, 2),
        ];
        assert_eq!(rs, expect);
    }

    #[test]
    fn reduced_unique_and_bounded() {
        let rs = rationals_up_to_height(12);
        let set: std::collections::BTreeSet<_> = rs.iter().cloned().collect();
        assert_eq!(set.len(), rs.len());
        assert!(rs.iter().all(|r| height_u64(r) <= 12));
        assert!(rs.contains(&rat_int(0)));
        assert!(rs.contains(&rat(-12, 11)));
    }

    #[test]
    fn count_matches_brute_force() {
        let rs = rationals_up_to_height(30);
        let mut brute = 0usize;
        for q in 1i64..=30 {
            for p in -30i64..=30 {
                if p.unsigned_abs().gcd(&(q as u64)) == 1 {
                    brute += 1;
                }
            }
        }
        assert_eq!(rs.len(), brute);
    }
}
