//! Independent oracles and random input generators for the integration
//! tests. The oracles share no code with the library beyond reading raw
//! structure constants and action matrices.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use algext::lie::{standard, LeviPair, LieAlgebra, LieModule};
use algext::linalg::{RatMatrix, Subspace};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// dense elimination

/// Row echelon form in place; returns the rank.
fn eliminate(rows: &mut Vec<Vec<Q>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(vectors: &[Vec<Q>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let n = first.len();
    let mut rows: Vec<Vec<Q>> = vectors.iter().filter(|v| v.iter().any(|x| !x.is_zero())).cloned().collect();
    eliminate(&mut rows, n).len()
}

/// Basis of `{ x : rows · x = 0 }`.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let pivots = eliminate(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn mat_vec(rows: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    rows.iter().map(|r| r.iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc + a * b)).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg complex by direct evaluation

/// Increasing `p`-tuples of `0..n`, lexicographic.
pub fn tuples(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, p, &mut Vec::new(), &mut out);
    out
}

/// Sign of the permutation sorting `t`, or 0 if `t` has a repeat.
fn parity(t: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if t[i] == t[j] {
                return 0;
            }
            if t[i] > t[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Raw data of a module: `c[i][j][k]` and `rho[i][r][s]`.
pub struct Brute {
    pub n: usize,
    pub a: usize,
    c: Vec<Vec<Vec<Q>>>,
    rho: Vec<Vec<Vec<Q>>>,
}

impl Brute {
    pub fn new(m: &LieModule) -> Self {
        let g = m.algebra();
        let n = g.dim();
        let a = m.dim();
        let c = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| g.structure_constant(i, j, k).clone()).collect()).collect())
            .collect();
        let rho = (0..n)
            .map(|i| (0..a).map(|r| (0..a).map(|s| m.action(i)[(r, s)].clone()).collect()).collect())
            .collect();
        Brute { n, a, c, rho }
    }

    /// Value of the cochain `coords` (in the increasing-tuple basis) on an
    /// arbitrary tuple of basis indices.
    fn eval(&self, p: usize, coords: &[Q], t: &[usize]) -> Vec<Q> {
        let s = parity(t);
        if s == 0 {
            return vec![Q::zero(); self.a];
        }
        let mut sorted = t.to_vec();
        sorted.sort_unstable();
        let idx = tuples(self.n, p).iter().position(|u| *u == sorted).expect("tuple exists");
        coords[idx * self.a..(idx + 1) * self.a].iter().map(|x| x * q(s)).collect()
    }

    fn apply_d(&self, p: usize, coords: &[Q]) -> Vec<Q> {
        let a = self.a;
        let mut out = Vec::new();
        for s in tuples(self.n, p + 1) {
            let mut val = vec![Q::zero(); a];
            for k in 0..=p {
                let rest: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x).collect();
                let w = self.eval(p, coords, &rest);
                let sign = if k % 2 == 0 { q(1) } else { q(-1) };
                for r in 0..a {
                    for t in 0..a {
                        val[r] += &sign * &self.rho[s[k]][r][t] * &w[t];
                    }
                }
            }
            for k in 0..=p {
                for l in k + 1..=p {
                    let sign = if (k + l) % 2 == 0 { q(1) } else { q(-1) };
                    let rest: Vec<usize> =
                        s.iter().enumerate().filter(|&(i, _)| i != k && i != l).map(|(_, &x)| x).collect();
                    for m in 0..self.n {
                        let cc = &self.c[s[k]][s[l]][m];
                        if cc.is_zero() {
                            continue;
                        }
                        let mut t = vec![m];
                        t.extend(&rest);
                        let w = self.eval(p, coords, &t);
                        for r in 0..a {
                            val[r] += &sign * cc * &w[r];
                        }
                    }
                }
            }
            out.extend(val);
        }
        out
    }

    pub fn cochain_dim(&self, p: usize) -> usize {
        binomial(self.n, p) * self.a
    }

    /// Images of the standard basis vectors of `C^p` (the columns of `d_p`).
    pub fn d_columns(&self, p: usize) -> Vec<Vec<Q>> {
        (0..self.cochain_dim(p))
            .map(|i| {
                let mut e = vec![Q::zero(); self.cochain_dim(p)];
                e[i] = Q::one();
                self.apply_d(p, &e)
            })
            .collect()
    }

    pub fn betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.n).map(|p| if p < self.n { rank(&self.d_columns(p)) } else { 0 }).collect();
        (0..=self.n)
            .map(|p| self.cochain_dim(p) - ranks[p] - if p > 0 { ranks[p - 1] } else { 0 })
            .collect()
    }

    /// `theta_x` applied to a cochain: `x.w(..) - sum_i w(.., [x, t_i], ..)`.
    fn theta(&self, p: usize, x: usize, coords: &[Q]) -> Vec<Q> {
        let a = self.a;
        let mut out = Vec::new();
        for t in tuples(self.n, p) {
            let w = self.eval(p, coords, &t);
            let mut val: Vec<Q> = (0..a).map(|r| (0..a).fold(Q::zero(), |acc, s| acc + &self.rho[x][r][s] * &w[s])).collect();
            for i in 0..p {
                for m in 0..self.n {
                    let cc = &self.c[x][t[i]][m];
                    if cc.is_zero() {
                        continue;
                    }
                    let mut u = t.clone();
                    u[i] = m;
                    let w = self.eval(p, coords, &u);
                    for r in 0..a {
                        val[r] -= cc * &w[r];
                    }
                }
            }
            out.extend(val);
        }
        out
    }

    /// Basis of the relative cochains: vanishing on `red` insertions and
    /// `red`-invariant.
    pub fn relative_basis(&self, red: &[usize], p: usize) -> Vec<Vec<Q>> {
        let dim = self.cochain_dim(p);
        let basis = |i: usize| {
            let mut e = vec![Q::zero(); dim];
            e[i] = Q::one();
            e
        };
        let mut constraints: Vec<Vec<Q>> = Vec::new();
        for (ti, t) in tuples(self.n, p).iter().enumerate() {
            if t.iter().any(|i| red.contains(i)) {
                for r in 0..self.a {
                    constraints.push(basis(ti * self.a + r));
                }
            }
        }
        for &x in red {
            let cols: Vec<Vec<Q>> = (0..dim).map(|i| self.theta(p, x, &basis(i))).collect();
            for r in 0..dim {
                constraints.push(cols.iter().map(|c| c[r].clone()).collect());
            }
        }
        nullspace(&constraints, dim)
    }

    pub fn relative_dims(&self, red: &[usize]) -> Vec<usize> {
        let k: Vec<Vec<Vec<Q>>> = (0..=self.n).map(|p| self.relative_basis(red, p)).collect();
        let r: Vec<usize> = (0..=self.n)
            .map(|p| if p < self.n { rank(&k[p].iter().map(|v| self.apply_d(p, v)).collect::<Vec<_>>()) } else { 0 })
            .collect();
        (0..=self.n).map(|p| k[p].len() - r[p] - if p > 0 { r[p - 1] } else { 0 }).collect()
    }
}

// ---------------------------------------------------------------------------
// polynomial group cohomology with trivial one-dimensional coefficients

#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly { nvars, terms: BTreeMap::from([(e, Q::one())]) }
    }

    pub fn monomial(exps: Vec<u32>) -> Self {
        Poly { nvars: exps.len(), terms: BTreeMap::from([(exps, Q::one())]) }
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        let entry = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Poly, s: &Q) -> Poly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Replaces variable `i` by `images[i]` (all in a common ring).
    pub fn subst(&self, images: &[Poly]) -> Poly {
        let nv = images[0].nvars;
        let mut out = Poly::zero(nv);
        for (e, c) in &self.terms {
            let mut t = Poly { nvars: nv, terms: BTreeMap::from([(vec![0; nv], c.clone())]) };
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&images[i]);
                }
            }
            out = out.add(&t, &q(1));
        }
        out
    }

    pub fn degree(e: &[u32]) -> usize {
        e.iter().map(|&x| x as usize).sum()
    }
}

/// Exponent vectors in `nvars` variables of total degree at most `d`.
pub fn exponents_up_to(nvars: usize, d: usize) -> Vec<Vec<u32>> {
    fn go(i: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k as u32;
            go(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(0, d, &mut vec![0; nvars], &mut out);
    out
}

/// A unipotent group law in `2d` variables (`x` block then `y` block).
pub struct OracleGroup {
    pub d: usize,
    pub law: Vec<Poly>,
}

impl OracleGroup {
    /// Parses laws written as sums of products like `x1*y2`.
    pub fn from_terms(d: usize, law: &[&[(i64, &[usize])]]) -> Self {
        let law = law
            .iter()
            .map(|terms| {
                let mut p = Poly::zero(2 * d);
                for &(c, vars) in terms.iter() {
                    let mut e = vec![0u32; 2 * d];
                    for &v in vars {
                        e[v] += 1;
                    }
                    p.add_term(e, q(c));
                }
                p
            })
            .collect();
        OracleGroup { d, law }
    }

    pub fn additive(d: usize) -> Self {
        let law = (0..d).map(|i| Poly::var(2 * d, i).add(&Poly::var(2 * d, d + i), &q(1))).collect();
        OracleGroup { d, law }
    }

    /// `(delta f)` for a cochain `f` in `n` blocks, as a polynomial in
    /// `n + 1` blocks, trivial coefficients.
    pub fn delta(&self, f: &Poly, n: usize) -> Poly {
        let d = self.d;
        let nv = (n + 1) * d;
        let block = |b: usize| -> Vec<Poly> { (0..d).map(|i| Poly::var(nv, b * d + i)).collect() };
        let product = |b: usize| -> Vec<Poly> {
            let mut images = block(b);
            images.extend(block(b + 1));
            self.law.iter().map(|p| p.subst(&images)).collect()
        };
        let mut out = Poly::zero(nv);
        // g0 . f(g1..gn) with g0 acting trivially
        let images: Vec<Poly> = (1..=n).flat_map(block).collect();
        if n > 0 {
            out = out.add(&f.subst(&images), &q(1));
        } else {
            out = f.lift(nv);
        }
        for i in 0..n {
            let mut images = Vec::new();
            for b in 0..n {
                match b.cmp(&i) {
                    std::cmp::Ordering::Less => images.extend(block(b)),
                    std::cmp::Ordering::Equal => images.extend(product(i)),
                    std::cmp::Ordering::Greater => images.extend(block(b + 1)),
                }
            }
            let sign = if (i + 1) % 2 == 0 { q(1) } else { q(-1) };
            out = out.add(&f.subst(&images), &sign);
        }
        let sign = if (n + 1) % 2 == 0 { q(1) } else { q(-1) };
        if n > 0 {
            let images: Vec<Poly> = (0..n).flat_map(block).collect();
            out = out.add(&f.subst(&images), &sign);
        } else {
            out = out.add(&f.lift(nv), &sign);
        }
        out
    }

    /// `h(D) = dim Z^p(D) - dim(B^p(D) ∩ C^p_{<=D})`.
    pub fn truncated_h(&self, p: usize, max_degree: usize) -> usize {
        let cochains = |n: usize| exponents_up_to(n * self.d, max_degree);
        let images = |n: usize| -> Vec<Poly> { cochains(n).into_iter().map(|e| self.delta(&Poly::monomial(e), n)).collect() };
        let dense = |polys: &[Poly]| -> (Vec<Vec<u32>>, Vec<Vec<Q>>) {
            let keys: Vec<Vec<u32>> = {
                let mut k: Vec<Vec<u32>> = polys.iter().flat_map(|p| p.terms.keys().cloned()).collect();
                k.sort();
                k.dedup();
                k
            };
            let vecs = polys.iter().map(|p| keys.iter().map(|e| p.terms.get(e).cloned().unwrap_or_else(Q::zero)).collect()).collect();
            (keys, vecs)
        };
        let zp = images(p);
        let (_, vz) = dense(&zp);
        let z_dim = zp.len() - rank(&vz);
        let b_dim = if p == 0 {
            0
        } else {
            let bp = images(p - 1);
            let (keys, vb) = dense(&bp);
            let high: Vec<usize> = (0..keys.len()).filter(|&k| Poly::degree(&keys[k]) > max_degree).collect();
            let vb_high: Vec<Vec<Q>> = vb.iter().map(|v| high.iter().map(|&k| v[k].clone()).collect()).collect();
            rank(&vb) - if high.is_empty() { 0 } else { rank(&vb_high) }
        };
        z_dim - b_dim
    }
}

impl Poly {
    fn lift(&self, nvars: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.resize(nvars, 0);
            out.add_term(e2, c.clone());
        }
        out
    }
}

pub fn oracle_heisenberg() -> OracleGroup {
    OracleGroup::from_terms(
        3,
        &[&[(1, &[0]), (1, &[3])], &[(1, &[1]), (1, &[4])], &[(1, &[2]), (1, &[5]), (1, &[0, 4])]],
    )
}

// ---------------------------------------------------------------------------
// random inputs

fn flatten(m: &RatMatrix) -> Vec<Q> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

fn random_int(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Q {
    q(rng.gen_range(lo..=hi))
}

/// Lie algebra spanned by `mats` (assumed closed under commutators) with
/// structure constants read off in that basis.
pub fn algebra_of_matrices(name: &str, mats: &[RatMatrix]) -> LieAlgebra {
    let k = mats.len();
    let columns = RatMatrix::from_fn(flatten(&mats[0]).len(), k, |r, c| flatten(&mats[c])[r].clone());
    let mut consts = vec![Q::zero(); k * k * k];
    for i in 0..k {
        for j in 0..k {
            let br = mats[i].commutator(&mats[j]);
            let x = columns.solve(&flatten(&br)).expect("closed under brackets");
            for (l, v) in x.into_iter().enumerate() {
                consts[(i * k + j) * k + l] = v;
            }
        }
    }
    let labels = (0..k).map(|i| format!("b{i}")).collect();
    LieAlgebra::new(name, labels, consts).expect("matrix algebra")
}

/// Closes `gens` under commutators; `None` if the span exceeds `max_dim`.
pub fn bracket_closure(gens: Vec<RatMatrix>, max_dim: usize) -> Option<Vec<RatMatrix>> {
    let size = flatten(&gens[0]).len();
    let mut span = Subspace::zero(size);
    let mut basis: Vec<RatMatrix> = Vec::new();
    let mut queue = gens;
    while let Some(m) = queue.pop() {
        let v = flatten(&m);
        if span.contains(&v) {
            continue;
        }
        span = span.sum(&Subspace::from_vectors(size, vec![v]));
        if span.dim() > max_dim {
            return None;
        }
        for b in &basis {
            queue.push(b.commutator(&m));
        }
        basis.push(m);
    }
    Some(basis)
}

/// A random Lie subalgebra of `gl_2`, `b_3` or `n_4` (dimension 1..=6)
/// together with its defining matrices.
pub fn random_matrix_algebra(rng: &mut ChaCha8Rng) -> (Arc<LieAlgebra>, Vec<RatMatrix>) {
    loop {
        let shape = rng.gen_range(0..3);
        let m = [2, 3, 4][shape];
        let ngens = rng.gen_range(1..=3);
        let gens: Vec<RatMatrix> = (0..ngens)
            .map(|_| {
                RatMatrix::from_fn(m, m, |r, c| match shape {
                    0 => random_int(rng, -2, 2),
                    1 if r <= c => random_int(rng, -2, 2),
                    2 if r < c => random_int(rng, -1, 1),
                    _ => Q::zero(),
                })
            })
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        if let Some(basis) = bracket_closure(gens, 6) {
            return (Arc::new(algebra_of_matrices("rand", &basis)), basis);
        }
    }
}

/// A random module over a random matrix algebra: trivial, natural, dual,
/// adjoint or a direct sum of two of these.
pub fn random_module(rng: &mut ChaCha8Rng) -> LieModule {
    let (g, mats) = random_matrix_algebra(rng);
    let one = |rng: &mut ChaCha8Rng| -> LieModule {
        match rng.gen_range(0..4) {
            0 => LieModule::trivial(g.clone(), rng.gen_range(1..=2)),
            1 => LieModule::new(g.clone(), mats[0].rows(), mats.clone()).expect("natural"),
            2 => {
                let dual = mats.iter().map(|m| m.transpose().scale(&q(-1))).collect();
                LieModule::new(g.clone(), mats[0].rows(), dual).expect("dual")
            }
            _ => LieModule::adjoint(g.clone()),
        }
    };
    let m = one(rng);
    if m.dim() <= 2 && rng.gen_bool(0.3) {
        let other = one(rng);
        if other.dim() <= 3 {
            return m.direct_sum(&other).expect("same algebra");
        }
    }
    m
}

/// Random Levi pairs: a torus acting diagonally on an ideal of strictly
/// upper triangular 3x3 matrices, or one of the built-in semidirect
/// products; with a random coefficient module.
pub fn random_levi_case(rng: &mut ChaCha8Rng) -> (LeviPair, LieModule) {
    let e = |i: usize, j: usize| RatMatrix::from_fn(3, 3, |r, c| if (r, c) == (i, j) { q(1) } else { q(0) });
    match rng.gen_range(0..4) {
        0 | 1 => {
            let ideals: [&[(usize, usize)]; 4] = [&[(0, 1), (0, 2), (1, 2)], &[(0, 2)], &[(0, 1), (0, 2)], &[(0, 2), (1, 2)]];
            let ideal = ideals[rng.gen_range(0..ideals.len())];
            let ntorus = rng.gen_range(1..=2);
            let torus: Vec<RatMatrix> = loop {
                let t: Vec<RatMatrix> = (0..ntorus)
                    .map(|_| RatMatrix::from_fn(3, 3, |r, c| if r == c { random_int(rng, -2, 2) } else { q(0) }))
                    .collect();
                let vs: Vec<Vec<Q>> = t.iter().map(flatten).collect();
                if rank(&vs) == ntorus {
                    break t;
                }
            };
            let mut mats = torus.clone();
            mats.extend(ideal.iter().map(|&(i, j)| e(i, j)));
            let g = Arc::new(algebra_of_matrices("torus_ideal", &mats));
            let red: Vec<usize> = (0..ntorus).collect();
            let u: Vec<usize> = (ntorus..mats.len()).collect();
            let pair = LeviPair::new(g.clone(), red, u).expect("torus acting on a nilpotent ideal");
            let module = match rng.gen_range(0..3) {
                0 => LieModule::trivial(g, rng.gen_range(1..=2)),
                1 => LieModule::new(g, 3, mats).expect("natural"),
                _ => LieModule::adjoint(g),
            };
            (pair, module)
        }
        2 => {
            let g = Arc::new(standard::sl2_ltimes_std());
            let pair = LeviPair::new(g.clone(), vec![0, 1, 2], vec![3, 4]).unwrap();
            let module = match rng.gen_range(0..3) {
                0 => LieModule::trivial(g, 1),
                1 => standard::std_module_of_semidirect(g),
                _ => LieModule::adjoint(g),
            };
            (pair, module)
        }
        _ => {
            let g = Arc::new(standard::sl2_ltimes_heisenberg());
            let pair = LeviPair::new(g.clone(), vec![0, 1, 2], vec![3, 4, 5]).unwrap();
            let module = if rng.gen_bool(0.5) { LieModule::trivial(g, 1) } else { LieModule::adjoint(g) };
            (pair, module)
        }
    }
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Q> {
    (0..n).map(|_| random_int(rng, -3, 3)).collect()
}

/// A random combination of the basis of `s` with small integer weights.
pub fn random_in(rng: &mut ChaCha8Rng, s: &Subspace) -> Vec<Q> {
    let coeffs = random_vector(rng, s.dim());
    s.combine(&coeffs)
}

pub fn is_all_zero(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn abs_sum(v: &[Q]) -> Q {
    v.iter().fold(Q::zero(), |acc, x| acc + x.abs())
}
