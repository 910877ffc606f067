//! Symmetric invariant tensors: symmetric traces, the d and v families, the
//! Pfaffian tensor, symmetrized products and expansion in a product basis.
//!
//! Every symmetrized tensor here is built the same way: enumerate the
//! nonzero terms of the unsymmetrized expression as (word of free indices,
//! value) pairs and hand them to a [`SymAccumulator`]. Summing over words and
//! dividing by the number of distinct arrangements is exactly unit-weight
//! symmetrization over distinct permutations. Summation order is the
//! enumeration order below, so results are deterministic.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{trace_product, Family, GeneratorSet};
use crate::combinat::{self, Index};
use crate::error::{LieError, Result};
use crate::tensor::{DenseSym, SymAccumulator, SymTensor};
use crate::walks::{closed_walks, SparseFamily};

const IMAG_TOL: f64 = 1e-9;

/// k_{i1..im} = Tr(X_(i1 ... X_im)), unit weight.
pub fn sym_trace_tensor(g: &GeneratorSet, m: usize) -> Result<SymTensor> {
    if !(2..=8).contains(&m) {
        return Err(LieError::OrderOutOfRange { op: "sym_trace_tensor", order: m, range: "2..=8" });
    }
    let r = g.dim();
    let fam = SparseFamily::complex(&g.matrices);
    let mut re = DenseSym::zeros(m, r)?;
    let mut im = DenseSym::zeros(m, r)?;
    let mut word = Index::new();
    let fams = vec![&fam; m];
    closed_walks(&fams, |labels, v: Complex64| {
        word.clear();
        word.extend_from_slice(labels);
        word.sort_unstable();
        let k = combinat::multiset_rank(&word);
        re.data[k] += v.re;
        im.data[k] += v.im;
    });
    let mut worst_im: f64 = 0.0;
    for key in combinat::multisets(r, m) {
        let k = combinat::multiset_rank(&key);
        if re.data[k] != 0.0 || im.data[k] != 0.0 {
            let w = combinat::multinomial(&key);
            re.data[k] /= w;
            worst_im = worst_im.max((im.data[k] / w).abs());
        }
    }
    if worst_im > IMAG_TOL {
        return Err(LieError::Convention(format!("symmetric trace has imaginary part {worst_im:.3e}")));
    }
    Ok(re.to_sparse())
}

/// The canonical symmetric tensor of order m used to build the primitive
/// cocycle tower: the metric for m = 2, the symmetric trace otherwise.
pub fn tower_tensor(g: &GeneratorSet, m: usize) -> Result<SymTensor> {
    if m == 2 {
        Ok(SymTensor::delta(g.dim()))
    } else {
        sym_trace_tensor(g, m)
    }
}

/// The primitive symmetric invariants with labels: the metric, symmetric
/// traces of the remaining orders and, for D_l, the Pfaffian tensor in
/// place of one order-l trace.
pub fn primitive_tensors(g: &GeneratorSet) -> Result<Vec<(String, SymTensor)>> {
    let l = g.spec.rank;
    let mut out = Vec::new();
    let mut pf_done = false;
    for m in g.spec.primitive_orders() {
        if g.spec.family == Family::D && m == l && !pf_done {
            let already = out.iter().any(|(_, h): &(String, SymTensor)| h.order() == m);
            if already || m % 2 == 1 {
                out.push(("pf".to_string(), pfaffian_tensor(g)?));
                pf_done = true;
                continue;
            }
        }
        let name = if m == 2 { "delta".to_string() } else { format!("k{m}") };
        out.push((name, tower_tensor(g, m)?));
    }
    Ok(out)
}

/// End link of a chain: for each contracted index a, the canonical free
/// remainders S of h's keys containing a, weighted by arrangements of S.
pub(crate) struct EndLink {
    lists: Vec<Vec<(Index, f64)>>,
}

/// Middle link: for each ordered pair of contracted indices (a, b).
pub(crate) struct MidLink {
    dim: usize,
    lists: Vec<Vec<(Index, f64)>>,
}

impl EndLink {
    pub(crate) fn new(h: &SymTensor) -> Self {
        let mut lists = vec![Vec::new(); h.dim()];
        for (k, v) in h.iter() {
            for p in 0..k.len() {
                if p > 0 && k[p] == k[p - 1] {
                    continue;
                }
                let mut s: Index = k.into();
                s.remove(p);
                let w = combinat::multinomial(&s);
                lists[k[p] as usize].push((s, w * v));
            }
        }
        EndLink { lists }
    }

    pub(crate) fn at(&self, a: u8) -> &[(Index, f64)] {
        &self.lists[a as usize]
    }
}

impl MidLink {
    pub(crate) fn new(h: &SymTensor) -> Self {
        let r = h.dim();
        let mut lists = vec![Vec::new(); r * r];
        for (k, v) in h.iter() {
            for p in 0..k.len() {
                if p > 0 && k[p] == k[p - 1] {
                    continue;
                }
                let mut rest: Index = k.into();
                rest.remove(p);
                for q in 0..rest.len() {
                    if q > 0 && rest[q] == rest[q - 1] {
                        continue;
                    }
                    let mut s = rest.clone();
                    s.remove(q);
                    let w = combinat::multinomial(&s);
                    lists[k[p] as usize * r + rest[q] as usize].push((s, w * v));
                }
            }
        }
        MidLink { dim: r, lists }
    }

    pub(crate) fn at(&self, a: u8, b: u8) -> &[(Index, f64)] {
        &self.lists[a as usize * self.dim + b as usize]
    }
}

/// Symmetrize the chain end . mid^k . end, where consecutive links share one
/// contracted index.
pub(crate) fn chain_symmetrize(end: &EndLink, mid: Option<&MidLink>, n_mid: usize, order: usize, dim: usize) -> Result<SymTensor> {
    let mut acc = SymAccumulator::new(order, dim)?;
    let mut word = Index::new();
    for a in 0..dim as u8 {
        for (s, v) in end.at(a) {
            word.clear();
            word.extend_from_slice(s);
            chain_rec(end, mid, n_mid, a, *v, &mut word, &mut acc);
        }
    }
    Ok(acc.finish())
}

fn chain_rec(end: &EndLink, mid: Option<&MidLink>, left: usize, a: u8, val: f64, word: &mut Index, acc: &mut SymAccumulator) {
    let base = word.len();
    if left == 0 {
        for (s, v) in end.at(a) {
            word.extend_from_slice(s);
            let mut w = word.clone();
            acc.emit(&mut w, val * v);
            word.truncate(base);
        }
        return;
    }
    let mid = mid.expect("middle link required");
    for b in 0..mid.dim as u8 {
        for (s, v) in mid.at(a, b) {
            word.extend_from_slice(s);
            chain_rec(end, Some(mid), left - 1, b, val * v, word, acc);
            word.truncate(base);
        }
    }
}

/// d^(m)_(i1..im) from the chain d_{i1 i2 l1} d_{l1 i3 l2} ... d_{l i_{m-1} i_m}.
pub fn d_family(d3: &SymTensor, m: usize) -> Result<SymTensor> {
    if d3.order() != 3 {
        return Err(LieError::Shape("d_family needs the order-3 d tensor".into()));
    }
    if !(3..=6).contains(&m) {
        return Err(LieError::OrderOutOfRange { op: "d_family", order: m, range: "3..=6" });
    }
    if m == 3 {
        return Ok(d3.clone());
    }
    let end = EndLink::new(d3);
    let mid = MidLink::new(d3);
    chain_symmetrize(&end, Some(&mid), m - 4, m, d3.dim())
}

/// v_{ijk sigma} = Tr({X_i, X_j, X_k} X_sigma) / kappa, where the bracket is
/// the sum of the six products. Full symmetry in all four indices is checked.
pub fn v_tensor(g: &GeneratorSet) -> Result<SymTensor> {
    if g.spec.family == Family::A {
        return Err(LieError::UnsupportedFamily { op: "v_tensor", family: 'A' });
    }
    let r = g.dim();
    let x = &g.matrices;
    let triples: Vec<Index> = combinat::multisets(r, 3).collect();
    let mut table = vec![0.0; triples.len() * r];
    for key in &triples {
        let (i, j, k) = (key[0] as usize, key[1] as usize, key[2] as usize);
        let s = &x[i] * &x[j] * &x[k]
            + &x[i] * &x[k] * &x[j]
            + &x[j] * &x[i] * &x[k]
            + &x[j] * &x[k] * &x[i]
            + &x[k] * &x[i] * &x[j]
            + &x[k] * &x[j] * &x[i];
        let mut rebuilt = s.clone();
        let base = combinat::multiset_rank(key) * r;
        for sigma in 0..r {
            let c = trace_product(&s, &x[sigma]) / g.kappa;
            if c.im.abs() > IMAG_TOL {
                return Err(LieError::Convention("v projection is not real".into()));
            }
            table[base + sigma] = c.re;
            rebuilt -= &x[sigma] * Complex64::new(c.re, 0.0);
        }
        if rebuilt.camax() > 1e-9 {
            return Err(LieError::Construction(format!(
                "triple product of generators {},{},{} leaves the algebra (residual {:.3e})",
                i + 1,
                j + 1,
                k + 1,
                rebuilt.camax()
            )));
        }
    }
    let mut v = SymTensor::zeros(4, r);
    let mut worst: f64 = 0.0;
    for key in combinat::multisets(r, 4) {
        let mut vals = Vec::with_capacity(4);
        for p in 0..4 {
            if p > 0 && key[p] == key[p - 1] {
                continue;
            }
            let mut rest: Index = key.clone();
            let sigma = rest.remove(p);
            vals.push(table[combinat::multiset_rank(&rest) * r + sigma as usize]);
        }
        let last = *vals.last().unwrap();
        for w in &vals {
            worst = worst.max((w - last).abs());
        }
        v.set_sorted(key, last);
    }
    if worst > 1e-9 {
        return Err(LieError::Construction(format!("v is not symmetric in its fourth index (residual {worst:.3e})")));
    }
    Ok(v)
}

/// v^(2p) from the chain v_{i1 i2 i3 a1} v_{a1 i4 i5 a2} ... v_{a i_{2p-2} i_{2p-1} i_{2p}}.
pub fn v_family(v4: &SymTensor, order: usize) -> Result<SymTensor> {
    if v4.order() != 4 {
        return Err(LieError::Shape("v_family needs the order-4 v tensor".into()));
    }
    match order {
        4 => Ok(v4.clone()),
        6 | 8 => {
            let end = EndLink::new(v4);
            let mid = MidLink::new(v4);
            chain_symmetrize(&end, Some(&mid), (order - 6) / 2, order, v4.dim())
        }
        _ => Err(LieError::OrderOutOfRange { op: "v_family", order, range: "4, 6, 8" }),
    }
}

/// Symmetric tensor of order l with Pf(sum lambda_i X_i) = Pf_{i1..il} lambda^i1 .. lambda^il,
/// by expanding the Pfaffian over perfect matchings of the 2l rows.
pub fn pfaffian_tensor(g: &GeneratorSet) -> Result<SymTensor> {
    if g.spec.family != Family::D {
        return Err(LieError::UnsupportedFamily { op: "pfaffian_tensor", family: g.spec.family.letter() });
    }
    let n = g.n();
    let l = g.spec.rank;
    if l > 5 {
        return Err(LieError::OrderOutOfRange { op: "pfaffian_tensor", order: l, range: "4..=5" });
    }
    let mut entry_lists = vec![Vec::new(); n * n];
    for (i, x) in g.matrices.iter().enumerate() {
        for p in 0..n {
            for q in 0..n {
                let v = x[(p, q)];
                if v.norm() > 0.0 {
                    if v.im.abs() > IMAG_TOL {
                        return Err(LieError::Convention("orthogonal generators must be real".into()));
                    }
                    entry_lists[p * n + q].push((i as u8, v.re));
                }
            }
        }
    }
    let mut acc = SymAccumulator::new(l, g.dim())?;
    let mut word = Index::new();
    for mt in combinat::matchings(n) {
        pf_rec(&mt.pairs, 0, mt.sign as f64, &entry_lists, n, &mut word, &mut acc);
    }
    Ok(acc.finish())
}

fn pf_rec(pairs: &[(u8, u8)], k: usize, val: f64, lists: &[Vec<(u8, f64)>], n: usize, word: &mut Index, acc: &mut SymAccumulator) {
    if k == pairs.len() {
        let mut w = word.clone();
        acc.emit(&mut w, val);
        return;
    }
    let (p, q) = pairs[k];
    for &(i, v) in &lists[p as usize * n + q as usize] {
        word.push(i);
        pf_rec(pairs, k + 1, val * v, lists, n, word, acc);
        word.pop();
    }
}

/// Pfaffian of a real antisymmetric matrix by skew elimination.
pub fn pfaffian(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    if n % 2 == 1 {
        return 0.0;
    }
    let mut a = m.clone();
    let mut pf = 1.0;
    let mut k = 0;
    while k < n {
        let (mut p, mut best) = (k + 1, 0.0);
        for j in k + 1..n {
            if a[(k, j)].abs() > best {
                best = a[(k, j)].abs();
                p = j;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if p != k + 1 {
            a.swap_rows(p, k + 1);
            a.swap_columns(p, k + 1);
            pf = -pf;
        }
        let piv = a[(k, k + 1)];
        pf *= piv;
        for i in k + 2..n {
            let tau = a[(k, i)] / piv;
            if tau == 0.0 {
                continue;
            }
            for j in 0..n {
                let t = a[(k + 1, j)];
                a[(i, j)] -= tau * t;
            }
            for j in 0..n {
                let t = a[(j, k + 1)];
                a[(j, i)] -= tau * t;
            }
        }
        k += 2;
    }
    pf
}

/// Contraction of a symmetric tensor with one vector in every slot.
pub fn eval_polynomial(h: &SymTensor, lambda: &[f64]) -> f64 {
    h.iter()
        .map(|(k, v)| combinat::multinomial(k) * v * k.iter().map(|&i| lambda[i as usize]).product::<f64>())
        .sum()
}

/// Unit-weight symmetrized product h1_(..) h2_(..) ... of the factors.
pub fn sym_product(factors: &[&SymTensor]) -> Result<SymTensor> {
    let first = factors.first().ok_or_else(|| LieError::Shape("empty product".into()))?;
    let dim = first.dim();
    if factors.iter().any(|t| t.dim() != dim) {
        return Err(LieError::Shape("factors of different dimension".into()));
    }
    let order: usize = factors.iter().map(|t| t.order()).sum();
    let mut acc = SymAccumulator::new(order, dim)?;
    let lists: Vec<Vec<(&[u8], f64)>> = factors
        .iter()
        .map(|t| t.iter().map(|(k, v)| (k, combinat::multinomial(k) * v)).collect())
        .collect();
    let mut word = Index::new();
    prod_rec(&lists, 0, 1.0, &mut word, &mut acc);
    Ok(acc.finish())
}

fn prod_rec(lists: &[Vec<(&[u8], f64)>], k: usize, val: f64, word: &mut Index, acc: &mut SymAccumulator) {
    if k == lists.len() {
        let mut w = word.clone();
        acc.emit(&mut w, val);
        return;
    }
    let base = word.len();
    for (key, v) in &lists[k] {
        word.extend_from_slice(key);
        prod_rec(lists, k + 1, val * v, word, acc);
        word.truncate(base);
    }
}

#[derive(Clone, Debug)]
pub struct VmBasis {
    pub order: usize,
    pub elements: Vec<(String, SymTensor)>,
}

/// All distinct symmetrized products of the primitives with total order m.
pub fn basis_vm(primitives: &[(String, SymTensor)], m: usize) -> Result<VmBasis> {
    let mut elements = Vec::new();
    let mut pick: Vec<usize> = Vec::new();
    fn rec(prims: &[(String, SymTensor)], start: usize, left: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(pick.clone());
            return;
        }
        for i in start..prims.len() {
            let o = prims[i].1.order();
            if o <= left && o > 0 {
                pick.push(i);
                rec(prims, i, left - o, pick, out);
                pick.pop();
            }
        }
    }
    let mut combos = Vec::new();
    rec(primitives, 0, m, &mut pick, &mut combos);
    for c in combos {
        let label = c.iter().map(|&i| primitives[i].0.as_str()).collect::<Vec<_>>().join("*");
        let t = if c.len() == 1 {
            primitives[c[0]].1.clone()
        } else {
            let fs: Vec<&SymTensor> = c.iter().map(|&i| &primitives[i].1).collect();
            sym_product(&fs)?
        };
        elements.push((label, t));
    }
    Ok(VmBasis { order: m, elements })
}

#[derive(Clone, Debug, Serialize)]
pub struct Expansion {
    pub coefficients: Vec<f64>,
    pub residual: f64,
}

/// Least-squares coefficients of `t` in the span of the basis elements over
/// all canonical entries. A rank-deficient basis is an error carrying the
/// null combination, scaled so its largest component is 1.
pub fn expand_in_basis(t: &SymTensor, basis: &VmBasis) -> Result<Expansion> {
    expand_in(t, &basis.elements.iter().map(|(_, e)| e).collect::<Vec<_>>())
}

pub fn expand_in(t: &SymTensor, elems: &[&SymTensor]) -> Result<Expansion> {
    let k = elems.len();
    if elems.iter().any(|e| e.order() != t.order() || e.dim() != t.dim()) {
        return Err(LieError::Shape("basis and target differ in order or dimension".into()));
    }
    let mut keys: Vec<Index> = t.iter().map(|(key, _)| Index::from(key)).collect();
    for e in elems {
        keys.extend(e.iter().map(|(key, _)| Index::from(key)));
    }
    keys.sort_unstable();
    keys.dedup();
    if keys.is_empty() || k == 0 {
        return Ok(Expansion { coefficients: vec![0.0; k], residual: 0.0 });
    }
    let a = DMatrix::from_fn(keys.len(), k, |row, col| elems[col].get_sorted(&keys[row]));
    let b = nalgebra::DVector::from_fn(keys.len(), |row, _| t.get_sorted(&keys[row]));
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let (imin, smin) = svd.singular_values.argmin();
    let vt = svd.v_t.as_ref().expect("v_t requested");
    if smax == 0.0 || smin <= 1e-9 * smax {
        let null: Vec<f64> = vt.row(imin).iter().copied().collect();
        let big = null.iter().copied().fold(0.0f64, |m, x| if x.abs() > m.abs() { x } else { m });
        return Err(LieError::DegenerateBasis(null.iter().map(|x| x / big).collect()));
    }
    let c = svd.solve(&b, 0.0).map_err(|e| LieError::Construction(e.to_string()))?;
    let fit = &a * &c;
    let residual = (fit - b).amax();
    Ok(Expansion { coefficients: c.iter().copied().collect(), residual })
}
