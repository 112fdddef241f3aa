//! Exact rational root extraction.
//!
//! Strategy: strip zero roots, pass to the square-free part, clear to a
//! primitive integer polynomial F, and monicize as G(u) = lc^(n-1)·F(u/lc) so
//! every rational root of F shows up as an *integer* root of G. Integer roots
//! of the monic G are then isolated with a Sturm chain and bisection down to
//! unit-width intervals — no integer factoring anywhere, so coefficient size
//! only costs logarithmically.

use super::poly1::Poly1;
use super::rat::Rat;
use crate::error::ArithError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootReport {
    /// Every rational root with its exact multiplicity in the input,
    /// sorted ascending.
    pub roots: Vec<(Rat, usize)>,
    /// Degree of the rational-root-free cofactor.
    pub cofactor_degree: usize,
}

pub fn rational_roots(f: &Poly1) -> Result<RootReport, ArithError> {
    let deg = f.degree().ok_or(ArithError::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(RootReport {
            roots: Vec::new(),
            cofactor_degree: 0,
        });
    }

    let mut candidates: Vec<Rat> = Vec::new();

    // zero roots: trailing zero coefficients
    let low = f
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero");
    if low > 0 {
        candidates.push(Rat::zero());
    }
    let reduced = Poly1::new(f.coeffs()[low..].to_vec());

    if reduced.degree() == Some(0) {
        return finish(f, deg, candidates);
    }
    let sf = reduced.square_free_part()?;
    let ints = sf.primitive_integer_coeffs();
    let n = ints.len() - 1;
    if n == 0 {
        return finish(f, deg, candidates);
    }
    let lc = ints[n].clone();
    debug_assert!(lc.is_positive());

    if n == 1 {
        // linear: a1 s + a0, single root -a0/a1
        candidates.push(Rat::new(-ints[0].clone(), ints[1].clone()));
        return finish(f, deg, candidates);
    }
    // G(u) = lc^(n-1) F(u/lc): monic with integer coefficients, roots lc·(roots of F)
    let mut monic: Vec<BigInt> = Vec::with_capacity(n + 1);
    for (i, a) in ints.iter().enumerate() {
        if i == n {
            monic.push(BigInt::one());
        } else {
            monic.push(a * pow_int(&lc, (n - 1 - i) as u32));
        }
    }

    for u in integer_roots_monic(&monic) {
        candidates.push(Rat::new(u, lc.clone()));
    }
    finish(f, deg, candidates)
}

fn finish(f: &Poly1, deg: usize, candidates: Vec<Rat>) -> Result<RootReport, ArithError> {
    let mut roots: Vec<(Rat, usize)> = Vec::new();
    let mut remaining = f.clone();
    for r in candidates {
        let lin = Poly1::new(vec![-r.clone(), Rat::one()]);
        let mut mult = 0usize;
        loop {
            if !remaining.eval(&r).is_zero() {
                break;
            }
            remaining = remaining.div_exact(&lin)?;
            mult += 1;
        }
        if mult > 0 {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    let used: usize = roots.iter().map(|(_, m)| m).sum();
    Ok(RootReport {
        roots,
        cofactor_degree: deg - used,
    })
}

fn pow_int(base: &BigInt, exp: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// All integer roots of a monic square-free integer polynomial (degree >= 2).
fn integer_roots_monic(coeffs: &[BigInt]) -> Vec<BigInt> {
    let chain = sturm_chain(coeffs);
    let bound = fujiwara_bound(coeffs);

    // dyadic endpoints value = a / 2^k
    #[derive(Clone)]
    struct Pt {
        a: BigInt,
        k: u32,
        variations: usize,
    }
    let eval_pt = |a: &BigInt, k: u32| sign_variations(&chain, a, k);

    let mut roots = Vec::new();
    let lo0 = -&bound;
    let hi0 = bound.clone();
    // endpoints beyond the root bound are never roots of G
    let mut stack = vec![(
        Pt {
            a: lo0.clone(),
            k: 0,
            variations: eval_pt(&lo0, 0),
        },
        Pt {
            a: hi0.clone(),
            k: 0,
            variations: eval_pt(&hi0, 0),
        },
    )];

    while let Some((lo, hi)) = stack.pop() {
        let count = lo.variations.saturating_sub(hi.variations);
        if count == 0 {
            continue;
        }
        // width = (hi.a - lo.a) / 2^k with both at a common scale
        debug_assert_eq!(lo.k, hi.k);
        let width_num = &hi.a - &lo.a;
        if width_num <= BigInt::one() << lo.k {
            // at most one integer strictly inside; test it directly
            let n = floor_div_pow2(&lo.a, lo.k) + 1;
            if (&n << lo.k) < hi.a && eval_int_sign(coeffs, &n, 0) == 0 {
                roots.push(n);
            }
            continue;
        }
        // promote endpoints to scale k+1; midpoint is lo.a + hi.a at that scale
        let k = lo.k + 1;
        let lo_a = &lo.a << 1;
        let hi_a = &hi.a << 1;
        let mid_a = &lo.a + &hi.a;
        if eval_int_sign(coeffs, &mid_a, k) == 0 {
            // Rational root of a monic integer polynomial is an integer.
            let (q, r) = mid_a.div_rem(&(BigInt::one() << k));
            debug_assert!(r.is_zero());
            roots.push(q);
            // resume on both sides, stepping half a unit away from the root
            let step = BigInt::one() << k.saturating_sub(1);
            let left_hi = &mid_a - &step;
            let right_lo = &mid_a + &step;
            let lv = eval_pt(&left_hi, k);
            let rv = eval_pt(&right_lo, k);
            stack.push((
                Pt {
                    a: lo_a,
                    k,
                    variations: lo.variations,
                },
                Pt {
                    a: left_hi,
                    k,
                    variations: lv,
                },
            ));
            stack.push((
                Pt {
                    a: right_lo,
                    k,
                    variations: rv,
                },
                Pt {
                    a: hi_a,
                    k,
                    variations: hi.variations,
                },
            ));
        } else {
            let mv = eval_pt(&mid_a, k);
            let mid_pt = Pt {
                a: mid_a,
                k,
                variations: mv,
            };
            stack.push((
                Pt {
                    a: lo_a,
                    k,
                    variations: lo.variations,
                },
                mid_pt.clone(),
            ));
            stack.push((
                mid_pt,
                Pt {
                    a: hi_a,
                    k,
                    variations: hi.variations,
                },
            ));
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn floor_div_pow2(a: &BigInt, k: u32) -> BigInt {
    // arithmetic shift right = floor division by 2^k for BigInt
    a >> k
}

/// Sturm chain of the squarefree polynomial, each member scaled to primitive
/// integer coefficients by a positive rational (signs preserved).
fn sturm_chain(coeffs: &[BigInt]) -> Vec<Vec<BigInt>> {
    let to_poly =
        |c: &[BigInt]| Poly1::new(c.iter().map(|v| Rat::from_integer(v.clone())).collect());
    let mut chain_polys = vec![to_poly(coeffs)];
    chain_polys.push(chain_polys[0].derivative());
    loop {
        let m = chain_polys.len();
        if chain_polys[m - 1].is_zero() {
            chain_polys.pop();
            break;
        }
        if chain_polys[m - 1].is_constant() {
            break;
        }
        let (_, r) = chain_polys[m - 2]
            .div_rem(&chain_polys[m - 1])
            .expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain_polys.push(-&r);
    }
    chain_polys
        .iter()
        .map(scale_to_int_preserving_sign)
        .collect()
}

fn scale_to_int_preserving_sign(p: &Poly1) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

/// Sign of p(a / 2^k) via the integer value 2^(k·deg)·p(a/2^k).
fn eval_int_sign(coeffs: &[BigInt], a: &BigInt, k: u32) -> i8 {
    // Horner with rescaling: v = sum c_i a^i 2^(k(n-i))
    let n = coeffs.len() - 1;
    let mut v = BigInt::zero();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if i == n {
            v = c.clone();
        } else {
            v = v * a + (c << (k * (n - i) as u32));
        }
    }
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn sign_variations(chain: &[Vec<BigInt>], a: &BigInt, k: u32) -> usize {
    let mut last: i8 = 0;
    let mut variations = 0;
    for member in chain {
        let s = eval_int_sign(member, a, k);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            variations += 1;
        }
        last = s;
    }
    variations
}

/// Integer B with every complex root strictly inside |z| < B (Fujiwara-style).
fn fujiwara_bound(coeffs: &[BigInt]) -> BigInt {
    let n = coeffs.len() - 1;
    let lc = coeffs[n].magnitude();
    let mut best = BigInt::one();
    for kk in 1..=n {
        let a = coeffs[n - kk].magnitude();
        if a.is_zero() {
            continue;
        }
        // ceil((|a|/|lc|)^(1/k)) <= (|a| / |lc| + 1).nth_root(k) + 1
        let ratio = a / lc + 1u32;
        let root = ratio.nth_root(kk as u32) + 1u32;
        let cand = BigInt::from(root);
        if cand > best {
            best = cand;
        }
    }
    best * 2 + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rat_int};

    fn p(coeffs: &[i64]) -> Poly1 {
        Poly1::from_i64(coeffs)
    }

    /// Independent multiplicity oracle: (s-r)^m divides f, (s-r)^(m+1) doesn't.
    fn check_multiplicity(f: &Poly1, r: &Rat, m: usize) {
        let lin = Poly1::new(vec![-r.clone(), Rat::one()]);
        let mut h = f.clone();
        for _ in 0..m {
            h = h.div_exact(&lin).expect("divides");
        }
        assert!(!h.eval(r).is_zero(), "multiplicity larger than reported");
    }

    #[test]
    fn sextic_with_two_rational_roots() {
        // s^6 - 1 = (s-1)(s+1)(s^4+s^2+1)
        let f = p(&[-1, 0, 0, 0, 0, 0, 1]);
        let rep = rational_roots(&f).unwrap();
        assert_eq!(rep.roots, vec![(rat_int(-1), 1), (rat_int(1), 1)]);
        assert_eq!(rep.cofactor_degree, 4);
        for (r, m) in &rep.roots {
            check_multiplicity(&f, r, *m);
        }
    }

    #[test]
    fn double_root_and_irreducible_cofactor() {
        // (s-2)^2 (s^2+1)
        let f = &(&p(&[-2, 1]) * &p(&[-2, 1])) * &p(&[1, 0, 1]);
        let rep = rational_roots(&f).unwrap();
        assert_eq!(rep.roots, vec![(rat_int(2), 2)]);
        assert_eq!(rep.cofactor_degree, 2);
        check_multiplicity(&f, &rat_int(2), 2);
    }

    #[test]
    fn no_rational_roots() {
        let rep = rational_roots(&p(&[1, 0, 1])).unwrap();
        assert!(rep.roots.is_empty());
        assert_eq!(rep.cofactor_degree, 2);
    }

    #[test]
    fn fractional_roots_and_zero_root() {
        // s (2s-3)^2 (3s+5)
        let f = &(&p(&[0, 1]) * &(&p(&[-3, 2]) * &p(&[-3, 2]))) * &p(&[5, 3]);
        let rep = rational_roots(&f).unwrap();
        assert_eq!(
            rep.roots,
            vec![(rat(-5, 3), 1), (rat_int(0), 1), (rat(3, 2), 2)]
        );
        assert_eq!(rep.cofactor_degree, 0);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(rational_roots(&Poly1::zero()).is_err());
    }

    #[test]
    fn big_coefficient_roots() {
        // (s - 10^12)(s + 1/10^12): clears to huge integers; still exact.
        let big = rat_int(1_000_000_000_000);
        let inv = rat(1, 1_000_000_000_000);
        let f = &Poly1::new(vec![-big.clone(), Rat::one()])
            * &Poly1::new(vec![inv.clone(), Rat::one()]);
        let rep = rational_roots(&f).unwrap();
        assert_eq!(rep.roots, vec![(-inv, 1), (big, 1)]);
        assert_eq!(rep.cofactor_degree, 0);
    }

    #[test]
    fn seeded_product_sweep() {
        // random split polynomials: roots recovered exactly with multiplicities
        let mut state = 0xdeadbeef12345678u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let mut f = Poly1::constant(rat_int(((next() % 5) + 1) as i64));
            let mut expected: Vec<(Rat, usize)> = Vec::new();
            for _ in 0..3 {
                let r = rat((next() % 21) as i64 - 10, (next() % 6) as i64 + 1);
                let m = (next() % 2 + 1) as usize;
                for _ in 0..m {
                    f = &f * &Poly1::new(vec![-r.clone(), Rat::one()]);
                }
                match expected.iter_mut().find(|(e, _)| *e == r) {
                    Some((_, em)) => *em += m,
                    None => expected.push((r, m)),
                }
            }
            // an irrational quadratic on top
            f = &f * &p(&[1, 1, 1]);
            expected.sort_by(|a, b| a.0.cmp(&b.0));
            let rep = rational_roots(&f).unwrap();
            assert_eq!(rep.roots, expected);
            assert_eq!(rep.cofactor_degree, 2);
        }
    }
}
