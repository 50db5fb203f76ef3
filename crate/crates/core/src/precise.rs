//! High-precision re-expansion of pullbacks.
//!
//! Pulling back `n` steps contracts by roughly `|(f^n)'|^{-1}`, so expanding
//! a double-precision result forward again amplifies its last-bit error by
//! the same factor. The check below redoes the whole chain in binary
//! floating point with enough extra bits to absorb that factor.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_complex::Complex64;

use crate::map::MapModel;
use crate::symbolic::InfiniteAddress;

const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundTrip {
    /// `|f^{nm}(ζ_n) - ζ|`, evaluated in high precision.
    pub residual: f64,
    /// Distance between the double-precision pullback and the
    /// high-precision one.
    pub f64_deviation: f64,
    /// Working precision in bits.
    pub bits: usize,
    /// `log10 |(f^{nm})'(ζ_n)|`.
    pub log10_expansion: f64,
}

struct Ctx {
    p: usize,
    cc: Consts,
}

#[derive(Clone)]
struct BigC {
    re: BigFloat,
    im: BigFloat,
}

impl Ctx {
    fn num(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }

    fn c(&self, z: Complex64) -> BigC {
        BigC {
            re: self.num(z.re),
            im: self.num(z.im),
        }
    }

    fn add(&self, a: &BigC, b: &BigC) -> BigC {
        BigC {
            re: a.re.add(&b.re, self.p, RM),
            im: a.im.add(&b.im, self.p, RM),
        }
    }

    fn sub(&self, a: &BigC, b: &BigC) -> BigC {
        BigC {
            re: a.re.sub(&b.re, self.p, RM),
            im: a.im.sub(&b.im, self.p, RM),
        }
    }

    fn exp(&mut self, a: &BigC) -> BigC {
        let m = a.re.exp(self.p, RM, &mut self.cc);
        let cos = a.im.cos(self.p, RM, &mut self.cc);
        let sin = a.im.sin(self.p, RM, &mut self.cc);
        BigC {
            re: m.mul(&cos, self.p, RM),
            im: m.mul(&sin, self.p, RM),
        }
    }

    /// Principal logarithm, `Im = +π` on the negative real axis.
    fn ln(&mut self, a: &BigC) -> BigC {
        let p = self.p;
        let n2 = a.re.mul(&a.re, p, RM).add(&a.im.mul(&a.im, p, RM), p, RM);
        let half = self.num(0.5);
        let re = n2.ln(p, RM, &mut self.cc).mul(&half, p, RM);
        let pi = self.cc.pi(p, RM);
        let im = if a.re.is_zero() {
            let h = pi.mul(&half, p, RM);
            if a.im.is_negative() {
                h.neg()
            } else {
                h
            }
        } else {
            let base = a.im.div(&a.re, p, RM).atan(p, RM, &mut self.cc);
            if a.re.is_positive() {
                base
            } else if a.im.is_negative() {
                base.sub(&pi, p, RM)
            } else {
                base.add(&pi, p, RM)
            }
        };
        BigC { re, im }
    }

    fn two_pi_k(&mut self, k: i64) -> BigFloat {
        let p = self.p;
        self.cc.pi(p, RM).mul(&self.num(2.0 * k as f64), p, RM)
    }
}

fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    match x.sign() {
        Some(Sign::Neg) | Some(Sign::Pos) => x.to_string().parse().unwrap_or(f64::NAN),
        None => f64::NAN,
    }
}

fn to_c64(z: &BigC) -> Complex64 {
    Complex64::new(to_f64(&z.re), to_f64(&z.im))
}

/// Pull `ζ` back `n·m` steps along `s` and expand it forward again, with a
/// precision chosen from the expansion of the double-precision chain.
/// `None` if the double-precision chain itself fails (singular hit or
/// non-finite values).
pub fn round_trip_residual(
    map: &MapModel,
    s: &InfiniteAddress,
    zeta: Complex64,
    n: usize,
    m: usize,
) -> Option<RoundTrip> {
    let steps = n * m;
    let c = map.c();

    let mut w = zeta;
    let mut log2_expansion = 0.0;
    for i in (0..steps).rev() {
        let u = w - c;
        if u.norm() == 0.0 {
            return None;
        }
        log2_expansion += u.norm().log2();
        w = map.inverse_branch(w, s.entry(i)).ok()?;
        if !(w.re.is_finite() && w.im.is_finite()) {
            return None;
        }
    }
    let f64_result = w;

    let magnitude = zeta.norm().max(1.0).log2().max(0.0);
    let bits = 128 + (log2_expansion.max(0.0) + magnitude).ceil() as usize;
    let bits = bits.div_ceil(64) * 64;
    let mut ctx = Ctx {
        p: bits,
        cc: Consts::new().ok()?,
    };

    let big_c = ctx.c(c);
    let big_zeta = ctx.c(zeta);
    let mut w = big_zeta.clone();
    for i in (0..steps).rev() {
        let u = ctx.sub(&w, &big_c);
        let mut l = ctx.ln(&u);
        let shift = ctx.two_pi_k(s.raw_entry(i));
        l.im = l.im.add(&shift, ctx.p, RM);
        w = l;
    }
    let pulled = to_c64(&w);

    let mut v = w;
    for _ in 0..steps {
        let e = ctx.exp(&v);
        v = ctx.add(&e, &big_c);
    }
    let diff = ctx.sub(&v, &big_zeta);
    Some(RoundTrip {
        residual: to_c64(&diff).norm(),
        f64_deviation: (pulled - f64_result).norm(),
        bits,
        log10_expansion: log2_expansion * std::f64::consts::LOG10_2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn high_precision_ln_matches_f64() {
        let mut ctx = Ctx {
            p: 192,
            cc: Consts::new().unwrap(),
        };
        for z in [
            Complex64::new(3.0, 4.0),
            Complex64::new(-2.0, 0.5),
            Complex64::new(-2.0, -0.5),
            Complex64::new(0.0, -1.0),
            Complex64::new(-5.0, 0.0),
        ] {
            let l = to_c64(&ctx.ln(&ctx.c(z)));
            let want = if z.im == 0.0 && z.re < 0.0 {
                Complex64::new(z.norm().ln(), std::f64::consts::PI)
            } else {
                z.ln()
            };
            assert!((l - want).norm() < 1e-15, "{z}: {l} vs {want}");
            let e = to_c64(&ctx.exp(&ctx.c(want)));
            assert!((e - z).norm() < 1e-14 * z.norm());
        }
    }

    #[test]
    fn fixed_address_round_trip_is_tight() {
        let map = MapModel::exponential(Complex64::new(-2.0, 0.0)).unwrap();
        let s = InfiniteAddress::constant(0);
        let rt = round_trip_residual(&map, &s, Complex64::new(10.0, 0.0), 25, 1).unwrap();
        assert!(rt.residual < 1e-12, "{rt:?}");
        assert!(rt.f64_deviation < 1e-14);
        assert!(rt.log10_expansion > 10.0);
    }
}
