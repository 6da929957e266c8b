//! Elements of ℚ(ζ_m) stored as residues modulo Φ_m.

use super::qpoly::{cyclotomic_poly, rat, QPoly};
use crate::error::TljError;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

/// ℚ(ζ_m) together with the complex embedding `ζ -> exp(2πi t/m)`.
#[derive(Debug)]
pub struct CycloField {
    order: u64,
    embed: u64,
    phi: Arc<QPoly>,
    degree: usize,
}

impl CycloField {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn embed(&self) -> u64 {
        self.embed
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &QPoly {
        &self.phi
    }
}

type FieldKey = (u64, u64);

fn fields() -> &'static RwLock<HashMap<FieldKey, Arc<CycloField>>> {
    static F: OnceLock<RwLock<HashMap<FieldKey, Arc<CycloField>>>> = OnceLock::new();
    F.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The shared field handle for `(m, t)`; `t` is taken mod `m`.
pub fn cyclo_field(m: u64, t: i64) -> Result<Arc<CycloField>, TljError> {
    if m == 0 {
        return Err(TljError::InvalidRoot { order: m, embed: t });
    }
    let tm = t.rem_euclid(m as i64) as u64;
    if m > 1 && tm.gcd(&m) != 1 || m == 1 && tm != 0 {
        return Err(TljError::InvalidRoot { order: m, embed: t });
    }
    if let Some(f) = fields().read().expect("field table poisoned").get(&(m, tm)) {
        return Ok(f.clone());
    }
    let phi = cyclotomic_poly(m);
    let degree = phi.degree().unwrap();
    let f = Arc::new(CycloField { order: m, embed: tm, phi, degree });
    Ok(fields().write().expect("field table poisoned").entry((m, tm)).or_insert(f).clone())
}

/// A field of order `big` (a multiple of `field.order`) whose generator embeds compatibly:
/// `ζ_big^{big/m}` maps to the same complex number as `ζ_m`.
pub fn extend_field(field: &CycloField, big: u64) -> Result<Arc<CycloField>, TljError> {
    let m = field.order;
    if !big.is_multiple_of(m) {
        return Err(TljError::InvalidParameters(format!("{big} is not a multiple of {m}")));
    }
    let t = field.embed;
    (0..big / m)
        .map(|k| t + k * m)
        .find(|c| c.gcd(&big) == 1)
        .map(|c| cyclo_field(big, c as i64))
        .unwrap_or(Err(TljError::InvalidRoot { order: big, embed: t as i64 }))
}

/// The exact element embedding to `exp(2πi·num/den)`; `den` must divide the order.
pub fn unit_root(field: &Arc<CycloField>, num: i64, den: u64) -> Cyclo {
    let m = field.order;
    assert!(m.is_multiple_of(den), "{den} does not divide the field order {m}");
    let inv = mod_inverse(field.embed as i64, m as i64);
    let j = ((m / den) as i64 * num).rem_euclid(m as i64) * inv % m as i64;
    Cyclo::zeta_pow(field, j)
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let e = a.extended_gcd(&m);
    e.x.rem_euclid(m)
}

#[derive(Clone, Debug)]
pub struct Cyclo {
    field: Arc<CycloField>,
    res: QPoly,
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Self) -> bool {
        self.same_field(o) && self.res == o.res
    }
}

impl Eq for Cyclo {}

impl std::hash::Hash for Cyclo {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.field.order.hash(h);
        self.res.hash(h);
    }
}

impl Cyclo {
    pub fn from_poly(field: &Arc<CycloField>, p: &QPoly) -> Self {
        Cyclo { field: field.clone(), res: p.rem_monic(&field.phi) }
    }

    pub fn constant(field: &Arc<CycloField>, v: BigRational) -> Self {
        Cyclo { field: field.clone(), res: QPoly::constant(v) }
    }

    pub fn zero(field: &Arc<CycloField>) -> Self {
        Cyclo { field: field.clone(), res: QPoly::zero() }
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Self {
        let e = k.rem_euclid(field.order as i64) as usize;
        Cyclo::from_poly(field, &QPoly::monomial(e, rat(1)))
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn residue(&self) -> &QPoly {
        &self.res
    }

    pub fn same_field(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.field, &o.field) || (self.field.order == o.field.order && self.field.embed == o.field.embed)
    }

    fn check(&self, o: &Self) {
        assert!(
            self.same_field(o),
            "cyclotomic arithmetic across fields: order {} (t={}) vs order {} (t={})",
            self.field.order,
            self.field.embed,
            o.field.order,
            o.field.embed
        );
    }

    pub fn is_zero(&self) -> bool {
        self.res.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.res.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.res.is_constant() {
            Some(self.res.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        Cyclo { field: self.field.clone(), res: self.res.add(&o.res) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        Cyclo { field: self.field.clone(), res: self.res.sub(&o.res) }
    }

    pub fn neg(&self) -> Self {
        Cyclo { field: self.field.clone(), res: self.res.neg() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        if self.res.is_constant() || o.res.is_constant() {
            return Cyclo { field: self.field.clone(), res: self.res.mul(&o.res) };
        }
        Cyclo { field: self.field.clone(), res: self.res.mul(&o.res).rem_monic(&self.field.phi) }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Cyclo { field: self.field.clone(), res: self.res.scale(s) }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(c) = self.as_rational() {
            return Some(Cyclo::constant(&self.field, c.recip()));
        }
        let (g, s, _) = self.res.ext_gcd(&self.field.phi);
        debug_assert!(g.is_one(), "Φ_m is irreducible");
        Some(Cyclo::from_poly(&self.field, &s))
    }

    /// Complex conjugation, realized as the automorphism `ζ -> ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.field.order as usize;
        let mut c = vec![BigRational::zero(); m.max(1)];
        for (k, v) in self.res.coeffs().iter().enumerate() {
            c[(m - k % m) % m] += v;
        }
        Cyclo::from_poly(&self.field, &QPoly::from_coeffs(c))
    }

    /// Applies the Galois automorphism `ζ -> ζ^k` (`k` coprime to the order).
    pub fn galois(&self, k: i64) -> Self {
        let m = self.field.order as i64;
        let mut c = vec![BigRational::zero(); m as usize];
        for (e, v) in self.res.coeffs().iter().enumerate() {
            c[(e as i64 * k).rem_euclid(m) as usize] += v;
        }
        Cyclo::from_poly(&self.field, &QPoly::from_coeffs(c))
    }

    /// Image under `ζ_m -> ζ_M^{M/m}` in a field whose order is a multiple of `m`.
    pub fn lift(&self, target: &Arc<CycloField>) -> Self {
        let (m, big) = (self.field.order, target.order);
        assert!(big % m == 0, "lift target order {big} is not a multiple of {m}");
        let k = (big / m) as usize;
        Cyclo::from_poly(target, &self.res.inflate(k))
    }

    pub fn to_c64(&self) -> Complex64 {
        let z = Complex64::from_polar(1.0, 2.0 * PI * self.field.embed as f64 / self.field.order as f64);
        self.res.eval_c64(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_roots_embed_as_requested() {
        let f = cyclo_field(24, 5).unwrap();
        for (num, den) in [(1i64, 4u64), (-3, 8), (1, 3), (5, 24)] {
            let z = unit_root(&f, num, den).to_c64();
            let w = Complex64::from_polar(1.0, 2.0 * PI * num as f64 / den as f64);
            assert!((z - w).norm() < 1e-12);
        }
        let base = cyclo_field(12, 5).unwrap();
        let big = extend_field(&base, 24).unwrap();
        let a = Cyclo::zeta_pow(&base, 1);
        assert!((a.lift(&big).to_c64() - a.to_c64()).norm() < 1e-12);
    }

    #[test]
    fn zeta_has_exact_order() {
        for &m in &[5u64, 8, 12, 16, 20] {
            let f = cyclo_field(m, 1).unwrap();
            let z = Cyclo::zeta_pow(&f, 1);
            let mut acc = Cyclo::constant(&f, rat(1));
            for k in 1..=m {
                acc = acc.mul(&z);
                assert_eq!(acc.is_one(), k == m, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn invalid_embedding_rejected() {
        assert!(cyclo_field(12, 4).is_err());
        assert!(cyclo_field(12, 5).is_ok());
    }

    #[test]
    fn inverse_and_conjugate() {
        let f = cyclo_field(16, 3).unwrap();
        let x = Cyclo::from_poly(&f, &QPoly::from_ints(&[2, -1, 0, 3]));
        assert!(x.mul(&x.inv().unwrap()).is_one());
        let c = x.conj();
        assert!((c.to_c64() - x.to_c64().conj()).norm() < 1e-12);
    }

    #[test]
    fn lift_preserves_embedding() {
        let f = cyclo_field(12, 5).unwrap();
        let g = cyclo_field(24, 5).unwrap();
        let x = Cyclo::from_poly(&f, &QPoly::from_ints(&[1, 2, 0, -1]));
        assert!((x.lift(&g).to_c64() - x.to_c64()).norm() < 1e-12);
    }
}
