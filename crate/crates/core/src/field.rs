//! Finite fields GF(p^f) by table lookup, and small square matrices over them.
//!
//! Element `k` of GF(p^f) is the polynomial whose base-`p` digits of `k` are
//! its coefficients, lowest degree first, reduced modulo the least monic
//! irreducible polynomial of degree `f` (coefficients compared from the
//! highest non-leading term down). So `0` and `1` are the field's zero and
//! one, and for `f > 1` element `p` is the class of `x`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field order we build tables for.
pub const MAX_FIELD_ORDER: u64 = 1024;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `q = p^f` with `p` prime and `f ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    f: u32,
}

impl PrimePower {
    /// Factors `q` as a prime power.
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
        let mut f = 0;
        let mut r = q;
        while r.is_multiple_of(p) {
            r /= p;
            f += 1;
        }
        if r != 1 {
            return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
        }
        Ok(PrimePower { p, f })
    }

    pub fn from_parts(p: u64, f: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if f == 0 {
            return Err(Error::InvalidParameter("exponent must be at least 1".into()));
        }
        p.checked_pow(f)
            .ok_or_else(|| Error::InvalidParameter(format!("{p}^{f} overflows")))?;
        Ok(PrimePower { p, f })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.f)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q())
    }
}

/// An element of some [`Field`], by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem(pub u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Arithmetic tables for GF(q).
#[derive(Clone, Debug)]
pub struct Field {
    order: PrimePower,
    /// Monic modulus, lowest degree first, length `f + 1`.
    modulus: Vec<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    primitive: FieldElem,
}

fn digits(mut k: u64, p: u64, f: u32) -> Vec<u64> {
    (0..f)
        .map(|_| {
            let d = k % p;
            k /= p;
            d
        })
        .collect()
}

fn from_digits(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo monic `m` over GF(p), both lowest degree first.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * lead) % p;
            }
        }
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    // Trial division by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        for tail in 0..p.pow(d as u32) {
            let mut divisor = digits(tail, p, d as u32);
            divisor.push(1);
            if poly_rem(m, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    pub fn new(order: PrimePower) -> Result<Self> {
        let (p, f) = (order.p(), order.f());
        let q = order.q();
        if q > MAX_FIELD_ORDER {
            return Err(Error::BudgetExceeded {
                what: "field order",
                value: q,
                limit: MAX_FIELD_ORDER,
            });
        }
        let modulus = if f == 1 {
            vec![0, 1]
        } else {
            // Tails ordered by their top coefficient first.
            let mut found = None;
            for tail in 0..p.pow(f) {
                let mut coeffs = digits(tail, p, f);
                coeffs.push(1);
                if is_irreducible(&coeffs, p) {
                    found = Some(coeffs);
                    break;
                }
            }
            found.expect("irreducible polynomials exist in every degree")
        };
        let qs = q as usize;
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for a in 0..q {
            let da = digits(a, p, f);
            for b in 0..q {
                let db = digits(b, p, f);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = from_digits(&sum, p) as u32;
                let mut prod = vec![0u64; 2 * f as usize - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = if f == 1 { prod } else { poly_rem(&prod, &modulus, p) };
                r.resize(f as usize, 0);
                mul[(a * q + b) as usize] = from_digits(&r, p) as u32;
            }
        }
        let mut neg = vec![0u32; qs];
        let mut inv = vec![0u32; qs];
        for a in 0..qs {
            neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u32;
            if a != 0 {
                inv[a] = (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u32;
            }
        }
        let mut field = Field {
            order,
            modulus,
            add,
            mul,
            neg,
            inv,
            primitive: FieldElem::ONE,
        };
        field.primitive = (1..q as u32)
            .map(FieldElem)
            .find(|&a| field.multiplicative_order(a) == q - 1)
            .expect("multiplicative group is cyclic");
        Ok(field)
    }

    pub fn order(&self) -> PrimePower {
        self.order
    }

    pub fn q(&self) -> u64 {
        self.order.q()
    }

    pub fn characteristic(&self) -> u64 {
        self.order.p()
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q() as u32).map(FieldElem)
    }

    /// Coefficients of `a` in the polynomial basis, lowest degree first.
    pub fn coefficients(&self, a: FieldElem) -> Vec<u64> {
        digits(a.0 as u64, self.order.p(), self.order.f())
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add[a.index() * self.q() as usize + b.index()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.mul[a.index() * self.q() as usize + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.index()])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        (a != FieldElem::ZERO).then(|| FieldElem(self.inv[a.index()]))
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn multiplicative_order(&self, a: FieldElem) -> u64 {
        assert_ne!(a, FieldElem::ZERO);
        let mut x = a;
        let mut k = 1;
        while x != FieldElem::ONE {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least element (by index) generating the multiplicative group.
    pub fn primitive_element(&self) -> FieldElem {
        self.primitive
    }

    /// Element with the given integer value in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElem {
        let p = self.order.p() as i64;
        FieldElem(n.rem_euclid(p) as u32)
    }
}

/// An `n × n` matrix over a field, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    n: usize,
    entries: Vec<FieldElem>,
}

impl Mat {
    pub fn new(n: usize, entries: Vec<FieldElem>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "{} entries for a {n}×{n} matrix",
                entries.len()
            )));
        }
        Ok(Mat { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![FieldElem::ZERO; n * n];
        for i in 0..n {
            entries[i * n + i] = FieldElem::ONE;
        }
        Mat { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElem {
        self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: FieldElem) {
        self.entries[row * self.n + col] = v;
    }

    pub fn mul(&self, other: &Mat, field: &Field) -> Mat {
        let n = self.n;
        let mut out = vec![FieldElem::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = FieldElem::ZERO;
                for k in 0..n {
                    acc = field.add(acc, field.mul(self.get(i, k), other.get(k, j)));
                }
                out[i * n + j] = acc;
            }
        }
        Mat { n, entries: out }
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[FieldElem], field: &Field) -> Vec<FieldElem> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(FieldElem::ZERO, |acc, k| {
                    field.add(acc, field.mul(self.get(i, k), v[k]))
                })
            })
            .collect()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self, field: &Field) -> FieldElem {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = FieldElem::ONE;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != FieldElem::ZERO) else {
                return FieldElem::ZERO;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = field.neg(det);
            }
            let pv = a[col * n + col];
            det = field.mul(det, pv);
            let pinv = field.inv(pv).unwrap();
            for r in col + 1..n {
                let factor = field.mul(a[r * n + col], pinv);
                if factor == FieldElem::ZERO {
                    continue;
                }
                for j in col..n {
                    let t = field.mul(factor, a[col * n + j]);
                    a[r * n + j] = field.sub(a[r * n + j], t);
                }
            }
        }
        det
    }
}

/// Scales a nonzero vector so its last nonzero coordinate is one.
pub fn normalize_projective(v: &mut [FieldElem], field: &Field) {
    let last = v
        .iter()
        .rposition(|&x| x != FieldElem::ZERO)
        .expect("projective points are nonzero vectors");
    let s = field.inv(v[last]).unwrap();
    for x in v.iter_mut() {
        *x = field.mul(*x, s);
    }
}
