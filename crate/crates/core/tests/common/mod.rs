#![allow(dead_code)]

use npk::exact_poly::{int, poly_gcd, Rat, UniPoly};
use npk::lattice::{polygon_from_family, BalancedFamily, LatticePolygon, LatticeVector};
use npk::ratfunc::{make_rational, Parametrization, RationalFunction};
use npk::synth::edge_data;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

/// Random polynomial of exact degree `deg`, coefficients in `[−9, 9]`.
pub fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> UniPoly {
    let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-9..=9)).collect();
    c.push(nonzero(rng, 9));
    UniPoly::from_ints(&c)
}

/// Random polynomial of exact degree `deg` not vanishing at 0.
pub fn random_poly_unit_at_zero(rng: &mut ChaCha8Rng, deg: usize) -> UniPoly {
    loop {
        let p = random_poly(rng, deg);
        if !p.coeff(0).eq(&int(0)) {
            return p;
        }
    }
}

pub fn coprime(a: &UniPoly, b: &UniPoly) -> bool {
    poly_gcd(a, b).map(|g| g.is_constant()).unwrap_or(false)
}

pub fn pairwise_coprime(ps: &[&UniPoly]) -> bool {
    ps.iter().enumerate().all(|(i, a)| ps[i + 1..].iter().all(|b| coprime(a, b)))
}

pub fn ratio(num: UniPoly, den: UniPoly) -> RationalFunction {
    make_rational(num, den).expect("nonzero operands")
}

pub fn param(f: RationalFunction, g: RationalFunction) -> Parametrization {
    Parametrization::new(f, g).expect("nonconstant")
}

/// `t^k` times `p`, as a rational function (negative `k` divides).
pub fn laurent(p: &UniPoly, k: i64) -> RationalFunction {
    let tk = UniPoly::monomial(Rat::from_integer(1.into()), k.unsigned_abs() as usize);
    if k >= 0 {
        ratio(p * &tk, UniPoly::one())
    } else {
        ratio(p.clone(), tk)
    }
}

/// `α·Π p_i^{d_i}`, `β·Π p_i^{e_i}` over a pool of up to four pairwise
/// coprime factors of degree ≤ 2, with both heights at most 6.
pub fn random_parametrization(rng: &mut ChaCha8Rng) -> Parametrization {
    loop {
        let k = rng.gen_range(1..=4);
        let pool: Vec<UniPoly> = (0..k)
            .map(|_| {
                let deg = rng.gen_range(1..=2);
                random_poly(rng, deg)
            })
            .collect();
        if !pairwise_coprime(&pool.iter().collect::<Vec<_>>()) {
            continue;
        }
        let mut fnum = UniPoly::constant(int(nonzero(rng, 9)));
        let mut fden = UniPoly::one();
        let mut gnum = UniPoly::constant(int(nonzero(rng, 9)));
        let mut gden = UniPoly::one();
        for p in &pool {
            let (d, e) = loop {
                let d: i64 = rng.gen_range(-2..=2);
                let e: i64 = rng.gen_range(-2..=2);
                if d != 0 || e != 0 {
                    break (d, e);
                }
            };
            let pd = p.pow(d.unsigned_abs() as u32);
            let pe = p.pow(e.unsigned_abs() as u32);
            if d > 0 {
                fnum = &fnum * &pd
            } else {
                fden = &fden * &pd
            }
            if e > 0 {
                gnum = &gnum * &pe
            } else {
                gden = &gden * &pe
            }
        }
        let (f, g) = (ratio(fnum, fden), ratio(gnum, gden));
        if f.height() > 6 || g.height() > 6 || (f.is_constant() && g.is_constant()) {
            continue;
        }
        return param(f, g);
    }
}

pub fn corpus(rng: &mut ChaCha8Rng, n: usize) -> Vec<Parametrization> {
    (0..n).map(|_| random_parametrization(rng)).collect()
}

/// Nondegenerate polygon from a random balanced family, with at most
/// `max_edges` edges of lattice length at most `max_len`.
pub fn random_polygon(rng: &mut ChaCha8Rng, max_edges: usize, max_len: i64) -> LatticePolygon {
    loop {
        let k = rng.gen_range(2..max_edges);
        let mut vs: Vec<LatticeVector> =
            (0..k).map(|_| LatticeVector::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect();
        let closing = vs.iter().fold(LatticeVector::ZERO, |a, &v| a - v);
        vs.push(closing);
        let Ok(family) = BalancedFamily::from_vectors(vs) else { continue };
        if family.is_empty() {
            continue;
        }
        let Ok(q) = polygon_from_family(&family) else { continue };
        if !q.is_polygon() {
            continue;
        }
        let edges = q.edges();
        if edges.len() <= max_edges && edges.iter().all(|e| e.length <= max_len) {
            return q;
        }
    }
}

pub fn outside_normals(q: &LatticePolygon) -> usize {
    edge_data(q).expect("polygon").iter().filter(|e| e.is_outside()).count()
}

pub fn random_polygon_with_outside(rng: &mut ChaCha8Rng, outside: usize) -> LatticePolygon {
    loop {
        let q = random_polygon(rng, 6, 4);
        if outside_normals(&q) == outside {
            return q;
        }
    }
}
