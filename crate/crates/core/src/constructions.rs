//! Concrete permutation groups: symmetric, alternating, cyclic, dihedral and
//! quaternion groups, direct products, and the linear and Suzuki groups
//! acting on projective points.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{is_prime, normalize_projective, Field, FieldElem, Mat, PrimePower};
use crate::kernel::{gcd, Group, Permutation};

/// Largest degree accepted by the small named constructors.
pub const MAX_DEGREE: usize = 4096;

fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        return Err(Error::BudgetExceeded {
            what: "degree",
            value: n as u64,
            limit: MAX_DEGREE as u64,
        });
    }
    Ok(())
}

fn cycle(n: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(n, &[points]).expect("valid cycle")
}

pub fn sym(n: usize) -> Result<Group> {
    check_degree(n)?;
    if n < 2 {
        return Ok(Group::trivial(n));
    }
    let all: Vec<usize> = (0..n).collect();
    Group::from_generators(n, vec![cycle(n, &all), cycle(n, &[0, 1])])
}

pub fn alt(n: usize) -> Result<Group> {
    check_degree(n)?;
    if n < 3 {
        return Ok(Group::trivial(n));
    }
    let gens = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
    Group::from_generators(n, gens)
}

pub fn cyclic(n: usize) -> Result<Group> {
    check_degree(n)?;
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group of order 0".into()));
    }
    let all: Vec<usize> = (0..n).collect();
    Group::from_generators(n, vec![cycle(n, &all)])
}

/// Symmetries of a regular `n`-gon, order `2n`, acting on its vertices.
pub fn dihedral(n: usize) -> Result<Group> {
    check_degree(n)?;
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "dihedral group needs n ≥ 3, got {n}"
        )));
    }
    let rotation: Vec<usize> = (0..n).collect();
    let reflection: Vec<u32> = (0..n).map(|i| ((n - i) % n) as u32).collect();
    Group::from_generators(
        n,
        vec![
            cycle(n, &rotation),
            Permutation::from_images(reflection)?,
        ],
    )
}

/// Regular representation of the quaternion group on 8 points.
///
/// Points `0..8` stand for `1, i, j, k, -1, -i, -j, -k`; generators are right
/// multiplication by `i` and by `j`.
pub fn quaternion8() -> Result<Group> {
    // (sign, unit) with unit 0=1, 1=i, 2=j, 3=k
    let mul = |(s1, u1): (u8, u8), (s2, u2): (u8, u8)| -> (u8, u8) {
        const TABLE: [[(u8, u8); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let (s, u) = TABLE[u1 as usize][u2 as usize];
        (s1 ^ s2 ^ s, u)
    };
    let right = |g: (u8, u8)| -> Permutation {
        let images = (0..8u8)
            .map(|x| {
                let (s, u) = mul((x / 4, x % 4), g);
                (s * 4 + u) as u32
            })
            .collect();
        Permutation::from_images_unchecked(images)
    };
    Group::from_generators(8, vec![right((0, 1)), right((0, 2))])
}

/// `a × b` acting on the disjoint union of their point sets, `a` first.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group> {
    let (m, n) = (a.degree(), b.degree());
    check_degree(m + n)?;
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<u32> = g.images().to_vec();
        images.extend((m..m + n).map(|x| x as u32));
        gens.push(Permutation::from_images_unchecked(images));
    }
    for g in b.generators() {
        let mut images: Vec<u32> = (0..m as u32).collect();
        images.extend(g.images().iter().map(|&x| x + m as u32));
        gens.push(Permutation::from_images_unchecked(images));
    }
    Group::from_generators(m + n, gens)
}

/// Points of PG(dim−1, q) as normalized vectors (last nonzero coordinate one),
/// ordered by the position of that coordinate, then by the earlier
/// coordinates read as a base-`q` number with later coordinates more
/// significant. For the projective line this gives `[1:0]` first, then
/// `[x:1]` by field index.
struct ProjectiveSpace {
    dim: usize,
    q: usize,
}

impl ProjectiveSpace {
    fn point_count(&self) -> usize {
        (0..self.dim).map(|k| self.q.pow(k as u32)).sum()
    }

    fn point(&self, index: usize) -> Vec<FieldElem> {
        let mut rest = index;
        let mut last = 0;
        while rest >= self.q.pow(last as u32) {
            rest -= self.q.pow(last as u32);
            last += 1;
        }
        let mut v = vec![FieldElem::ZERO; self.dim];
        for c in v.iter_mut().take(last) {
            *c = FieldElem((rest % self.q) as u32);
            rest /= self.q;
        }
        v[last] = FieldElem::ONE;
        v
    }

    fn index(&self, v: &[FieldElem]) -> usize {
        let last = v.iter().rposition(|&x| x != FieldElem::ZERO).unwrap();
        let offset: usize = (0..last).map(|k| self.q.pow(k as u32)).sum();
        offset
            + v[..last]
                .iter()
                .rev()
                .fold(0, |acc, c| acc * self.q + c.index())
    }

    fn permutation(&self, m: &Mat, field: &Field) -> Permutation {
        let images = (0..self.point_count())
            .map(|i| {
                let mut w = m.apply(&self.point(i), field);
                normalize_projective(&mut w, field);
                self.index(&w) as u32
            })
            .collect();
        Permutation::from_images_unchecked(images)
    }
}

fn projective_group(dim: usize, field: &Field, mats: &[Mat]) -> Result<Group> {
    let space = ProjectiveSpace {
        dim,
        q: field.q() as usize,
    };
    let gens = mats.iter().map(|m| space.permutation(m, field)).collect();
    Group::from_generators(space.point_count(), gens)
}

fn mat(field: &Field, n: usize, entries: &[i64]) -> Mat {
    Mat::new(n, entries.iter().map(|&x| field.from_int(x)).collect()).unwrap()
}

/// Order of PSL(2, q).
pub fn psl2_order(q: u64) -> u64 {
    q * (q * q - 1) / gcd(2, q - 1)
}

/// PSL(2, q) acting on the q+1 points of the projective line.
pub fn psl2(q: PrimePower) -> Result<Group> {
    if q.q() < 4 {
        return Err(Error::Precondition(format!(
            "PSL(2,{q}) is soluble; need q ≥ 4"
        )));
    }
    let field = Field::new(q)?;
    let w = field.primitive_element();
    let w_inv = field.inv(w).unwrap();
    let diag = Mat::new(2, vec![w, FieldElem::ZERO, FieldElem::ZERO, w_inv])?;
    let gens = [
        diag,
        mat(&field, 2, &[1, 1, 0, 1]),
        mat(&field, 2, &[0, 1, -1, 0]),
    ];
    let g = projective_group(2, &field, &gens)?;
    debug_assert_eq!(g.order(), psl2_order(q.q()));
    Ok(g)
}

/// PSL(3, 3) = SL(3, 3) acting on the 13 points of the projective plane.
pub fn psl3_3() -> Result<Group> {
    let field = Field::new(PrimePower::new(3)?)?;
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut m = Mat::identity(3);
                m.set(i, j, FieldElem::ONE);
                gens.push(m);
            }
        }
    }
    projective_group(3, &field, &gens)
}

/// Action of 2×2 matrices over GF(3) on the 8 nonzero column vectors.
fn gf3_vector_group(mats: &[Mat]) -> Result<Group> {
    let field = Field::new(PrimePower::new(3)?)?;
    let vectors: Vec<[FieldElem; 2]> = (1..9u32)
        .map(|k| [FieldElem(k % 3), FieldElem(k / 3)])
        .collect();
    let index: HashMap<[FieldElem; 2], u32> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| (*v, i as u32))
        .collect();
    let gens = mats
        .iter()
        .map(|m| {
            let images = vectors
                .iter()
                .map(|v| {
                    let w = m.apply(v, &field);
                    index[&[w[0], w[1]]]
                })
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    Group::from_generators(8, gens)
}

/// SL(2, 3) on the nonzero vectors of GF(3)², order 24.
pub fn sl2_3() -> Result<Group> {
    let f = Field::new(PrimePower::new(3)?)?;
    gf3_vector_group(&[mat(&f, 2, &[1, 1, 0, 1]), mat(&f, 2, &[1, 0, 1, 1])])
}

/// GL(2, 3) on the nonzero vectors of GF(3)², order 48.
pub fn gl2_3() -> Result<Group> {
    let f = Field::new(PrimePower::new(3)?)?;
    gf3_vector_group(&[
        mat(&f, 2, &[1, 1, 0, 1]),
        mat(&f, 2, &[1, 0, 1, 1]),
        mat(&f, 2, &[-1, 0, 0, 1]),
    ])
}

/// The block upper-triangular subgroup `H` of PSL(3,3), matrices
/// `[[a b c] [d e f] [0 0 g]]` with `(ae − bd)g = 1`, and its unipotent normal
/// subgroup `K` of matrices `[[1 0 c] [0 1 f] [0 0 1]]`, both as subgroups
/// of [`psl3_3`].
pub fn psl3_3_parabolic() -> Result<(Group, Group)> {
    let f = Field::new(PrimePower::new(3)?)?;
    // Generators of GL(2,3) embedded in the top-left block, with g = det⁻¹.
    let block = |a: i64, b: i64, d: i64, e: i64| -> Mat {
        let det = f.from_int(a * e - b * d);
        let g = f.inv(det).expect("invertible block");
        let mut m = mat(&f, 3, &[a, b, 0, d, e, 0, 0, 0, 0]);
        m.set(2, 2, g);
        m
    };
    let k_gens = [
        mat(&f, 3, &[1, 0, 1, 0, 1, 0, 0, 0, 1]),
        mat(&f, 3, &[1, 0, 0, 0, 1, 1, 0, 0, 1]),
    ];
    let mut h_gens = vec![block(1, 1, 0, 1), block(1, 0, 1, 1), block(-1, 0, 0, 1)];
    h_gens.extend(k_gens.iter().cloned());
    let parent = psl3_3()?;
    let h = projective_group(3, &f, &h_gens)?;
    let k = projective_group(3, &f, &k_gens)?;
    let h = parent.subgroup(h.generators().to_vec())?;
    let k = h.subgroup(k.generators().to_vec())?;
    Ok((h, k))
}

/// Order of Sz(q).
pub fn sz_order(q: u64) -> u64 {
    q * q * (q * q + 1) * (q - 1)
}

/// Suzuki group data over GF(2^(2n+1)).
struct SuzukiMatrices {
    field: Field,
    unipotent: Vec<Mat>,
    torus: Mat,
    weyl: Mat,
}

fn suzuki_matrices(q: PrimePower) -> Result<SuzukiMatrices> {
    if q.p() != 2 || q.f() < 3 || q.f().is_multiple_of(2) || !is_prime(q.f() as u64) {
        return Err(Error::Precondition(format!(
            "Sz(q) needs q = 2^p with p an odd prime, got q = {q}"
        )));
    }
    if q.q() > 32 {
        return Err(Error::BudgetExceeded {
            what: "Suzuki field order",
            value: q.q(),
            limit: 32,
        });
    }
    let field = Field::new(q)?;
    let n = (q.f() - 1) / 2;
    // x ↦ x^θ with θ = 2^(n+1), so that θ² is the Frobenius map.
    let theta = |x: FieldElem| field.pow(x, 1 << (n + 1));
    let (add, mul) = (|a, b| field.add(a, b), |a, b| field.mul(a, b));
    let t = |a: FieldElem, b: FieldElem| -> Mat {
        let z = FieldElem::ZERO;
        let one = FieldElem::ONE;
        let a_th = theta(a);
        let corner = add(
            add(mul(mul(a, a), a_th), mul(a, b)),
            theta(b),
        );
        let second = add(mul(a, a_th), b);
        Mat::new(
            4,
            vec![
                one, z, z, z, //
                a, one, z, z, //
                b, a_th, one, z, //
                corner, second, a, one,
            ],
        )
        .unwrap()
    };
    let mut unipotent = Vec::new();
    for i in 0..q.f() {
        let basis = FieldElem(1 << i);
        unipotent.push(t(basis, FieldElem::ZERO));
        unipotent.push(t(FieldElem::ZERO, basis));
    }
    let lambda = field.primitive_element();
    let lambda_inv = field.inv(lambda).unwrap();
    let e = 1u64 << n;
    let torus = Mat::new(
        4,
        vec![
            field.pow(lambda, 1 + e), FieldElem::ZERO, FieldElem::ZERO, FieldElem::ZERO,
            FieldElem::ZERO, field.pow(lambda, e), FieldElem::ZERO, FieldElem::ZERO,
            FieldElem::ZERO, FieldElem::ZERO, field.pow(lambda_inv, e), FieldElem::ZERO,
            FieldElem::ZERO, FieldElem::ZERO, FieldElem::ZERO, field.pow(lambda_inv, 1 + e),
        ],
    )?;
    let mut weyl = Mat::new(4, vec![FieldElem::ZERO; 16])?;
    for i in 0..4 {
        weyl.set(i, 3 - i, FieldElem::ONE);
    }
    Ok(SuzukiMatrices {
        field,
        unipotent,
        torus,
        weyl,
    })
}

/// The Suzuki ovoid: orbit of `⟨e₄⟩` in PG(3, q) under the given matrices,
/// in breadth-first discovery order, returned as permutations of it.
fn ovoid_action(field: &Field, all: &[&Mat], act: &[&Mat]) -> Result<(usize, Vec<Permutation>)> {
    let space = ProjectiveSpace {
        dim: 4,
        q: field.q() as usize,
    };
    let start = vec![FieldElem::ZERO, FieldElem::ZERO, FieldElem::ZERO, FieldElem::ONE];
    let mut points = vec![start.clone()];
    let mut position: HashMap<usize, u32> = HashMap::new();
    position.insert(space.index(&start), 0);
    let mut k = 0;
    while k < points.len() {
        for m in all {
            let mut w = m.apply(&points[k], field);
            normalize_projective(&mut w, field);
            let idx = space.index(&w);
            if let std::collections::hash_map::Entry::Vacant(e) = position.entry(idx) {
                e.insert(points.len() as u32);
                points.push(w);
            }
        }
        k += 1;
    }
    let q = field.q() as usize;
    if points.len() != q * q + 1 {
        return Err(Error::InvalidParameter(format!(
            "ovoid orbit has {} points, expected {}",
            points.len(),
            q * q + 1
        )));
    }
    let perms = act
        .iter()
        .map(|m| {
            let images = points
                .iter()
                .map(|v| {
                    let mut w = m.apply(v, field);
                    normalize_projective(&mut w, field);
                    position[&space.index(&w)]
                })
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    Ok((points.len(), perms))
}

/// Sz(q) on the q²+1 points of its ovoid, for q = 8 or 32. Point 0 is `⟨e₄⟩`.
pub fn sz(q: PrimePower) -> Result<Group> {
    let data = suzuki_matrices(q)?;
    let mut all: Vec<&Mat> = data.unipotent.iter().collect();
    all.push(&data.torus);
    all.push(&data.weyl);
    let (degree, gens) = ovoid_action(&data.field, &all, &all)?;
    let g = Group::from_generators(degree, gens)?;
    if g.order() != sz_order(q.q()) {
        return Err(Error::InvalidParameter(format!(
            "Suzuki generators produced order {}, expected {}",
            g.order(),
            sz_order(q.q())
        )));
    }
    Ok(g)
}

/// The stabilizer of `⟨e₄⟩` in [`sz`]: lower unitriangular matrices extended
/// by the diagonal torus, order q²(q−1). Same point labels as [`sz`].
pub fn sz_frobenius_subgroup(q: PrimePower) -> Result<Group> {
    let data = suzuki_matrices(q)?;
    let mut all: Vec<&Mat> = data.unipotent.iter().collect();
    all.push(&data.torus);
    all.push(&data.weyl);
    let mut act: Vec<&Mat> = data.unipotent.iter().collect();
    act.push(&data.torus);
    let (degree, gens) = ovoid_action(&data.field, &all, &act)?;
    Group::from_generators(degree, gens)
}

/// The diagonal torus of [`sz`], cyclic of order q−1.
pub fn sz_torus(q: PrimePower) -> Result<Group> {
    let data = suzuki_matrices(q)?;
    let mut all: Vec<&Mat> = data.unipotent.iter().collect();
    all.push(&data.torus);
    all.push(&data.weyl);
    let (degree, gens) = ovoid_action(&data.field, &all, &[&data.torus])?;
    Group::from_generators(degree, gens)
}
