//! Skewsymmetric cocycles built from symmetric invariant tensors, the two
//! recurrence relations, and the checks that go with them.
//!
//! All constructions pull: for every strictly increasing tuple the value is
//! assembled from signed matchings of the tuple into pairs, each pair
//! contributing a structure constant C_ab^l = f_abl.

use crate::combinat::{self, Index};
use crate::error::{check_budget, LieError, Result};
use crate::invariance::{alt_invariance, sym_invariance};
use crate::structure::{Brackets, SymPairs};
use crate::tensor::{AltTensor, DenseSym, SymTensor};

/// Tolerance used when verifying antisymmetry and invariance of inputs,
/// relative to the largest entry.
pub const CHECK_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug)]
pub struct CocycleOptions {
    /// Use the form antisymmetrizing all 2m-1 slots instead of 2m-3.
    pub full_form: bool,
    /// Re-evaluate with rho and sigma exchanged, and rho with the first
    /// middle index, to confirm total antisymmetry.
    pub verify: bool,
}

impl Default for CocycleOptions {
    fn default() -> Self {
        CocycleOptions { full_form: false, verify: true }
    }
}

/// Enumerate the signed perfect matchings of `elems`, pairing the first free
/// element with each later one, and call `leaf(labels, value)` for every
/// nonzero choice of bracket targets.
pub(crate) fn matchings_rec(b: &Brackets, elems: &[u8], labels: &mut Index, val: f64, leaf: &mut impl FnMut(&[u8], f64)) {
    if elems.is_empty() {
        leaf(labels, val);
        return;
    }
    let x = elems[0];
    for k in 1..elems.len() {
        let list = b.pair(x, elems[k]);
        if list.is_empty() {
            continue;
        }
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let mut rest: Index = Index::with_capacity(elems.len() - 2);
        rest.extend_from_slice(&elems[1..k]);
        rest.extend_from_slice(&elems[k + 1..]);
        for &(l, c) in list {
            labels.push(l);
            matchings_rec(b, &rest, labels, sign * val * c, leaf);
            labels.pop();
        }
    }
}

fn lookup_sym(h: &DenseSym, labels: &[u8], last: u8) -> f64 {
    let mut key: Index = Index::from_slice(labels);
    key.push(last);
    key.sort_unstable();
    h.at_sorted(&key)
}

/// C_{rho [a} C_{..} .. C_{..]} h_{l.. sigma} summed over choices of the
/// partner a of rho and matchings of the rest, without the overall factor.
fn reduced_sum(b: &Brackets, h: &DenseSym, rho: u8, mid: &[u8], sigma: u8) -> f64 {
    let mut total = 0.0;
    let mut labels = Index::new();
    for p in 0..mid.len() {
        let list = b.pair(rho, mid[p]);
        if list.is_empty() {
            continue;
        }
        let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
        let mut rest: Index = Index::with_capacity(mid.len() - 1);
        rest.extend_from_slice(&mid[..p]);
        rest.extend_from_slice(&mid[p + 1..]);
        for &(l, c) in list {
            labels.clear();
            labels.push(l);
            matchings_rec(b, &rest, &mut labels, sign * c, &mut |ls, v| total += v * lookup_sym(h, ls, sigma));
        }
    }
    total
}

/// Sum over the slot e contracted with h and matchings of the rest.
fn full_sum(b: &Brackets, h: &DenseSym, idx: &[u8]) -> f64 {
    let q = idx.len();
    let mut total = 0.0;
    let mut labels = Index::new();
    for p in 0..q {
        let sign = if (q - 1 - p) % 2 == 0 { 1.0 } else { -1.0 };
        let mut rest: Index = Index::with_capacity(q - 1);
        rest.extend_from_slice(&idx[..p]);
        rest.extend_from_slice(&idx[p + 1..]);
        labels.clear();
        let e = idx[p];
        matchings_rec(b, &rest, &mut labels, sign, &mut |ls, v| total += v * lookup_sym(h, ls, e));
    }
    total
}

/// Omega_{rho i_2 .. i_{2m-2} sigma} = C_{rho [i_2}^{l_1} .. C_{i_{2m-3} i_{2m-2}]}^{l_{m-1}} h_{l_1 .. l_{m-1} sigma}
/// with unit-weight antisymmetrization of the 2m-3 bracketed slots.
/// `h` must be ad-invariant; total antisymmetry of the result is verified.
pub fn cocycle_from_sym(f: &AltTensor, h: &SymTensor) -> Result<AltTensor> {
    cocycle_from_sym_with(f, h, CocycleOptions::default())
}

pub fn cocycle_from_sym_with(f: &AltTensor, h: &SymTensor, opts: CocycleOptions) -> Result<AltTensor> {
    let m = h.order();
    let r = f.dim();
    if m < 2 {
        return Err(LieError::OrderOutOfRange { op: "cocycle_from_sym", order: m, range: ">= 2" });
    }
    if h.dim() != r {
        return Err(LieError::Shape("h and f live on different index spaces".into()));
    }
    let b = Brackets::new(f);
    let scale = h.max_abs().max(1.0);
    let res = sym_invariance(h, &b)?;
    if res > CHECK_TOL * scale {
        return Err(LieError::NotInvariant(res));
    }
    let q = 2 * m - 1;
    let mut out = AltTensor::zeros(q, r);
    if q > r || h.is_empty() {
        return Ok(out);
    }
    check_budget(|| format!("order-{q} cocycle over dimension {r}"), combinat::strict_count(r, q))?;
    let hd = h.to_dense()?;
    let reduced_coef = 2f64.powi(m as i32 - 2) * combinat::factorial(m - 2) / combinat::factorial(q - 2);
    let full_coef = 2f64.powi(m as i32 - 1) * combinat::factorial(m - 1) / combinat::factorial(q);
    let mut worst: f64 = 0.0;
    let mut idx: Index = (0..q as u8).collect();
    let mut swapped = Index::with_capacity(q);
    loop {
        let v = if opts.full_form {
            full_coef * full_sum(&b, &hd, &idx)
        } else {
            reduced_coef * reduced_sum(&b, &hd, idx[0], &idx[1..q - 1], idx[q - 1])
        };
        if opts.verify && !opts.full_form {
            let w1 = reduced_coef * reduced_sum(&b, &hd, idx[q - 1], &idx[1..q - 1], idx[0]);
            worst = worst.max((v + w1).abs());
            if q > 3 {
                swapped.clear();
                swapped.push(idx[0]);
                swapped.extend_from_slice(&idx[2..q - 1]);
                let w2 = reduced_coef * reduced_sum(&b, &hd, idx[1], &swapped, idx[q - 1]);
                worst = worst.max((v + w2).abs());
            }
        }
        out.set_sorted(idx.clone(), v);
        if !combinat::next_strict(&mut idx, r) {
            break;
        }
    }
    if worst > CHECK_TOL * scale {
        return Err(LieError::Construction(format!("cocycle is not totally antisymmetric (residual {worst:.3e})")));
    }
    Ok(out)
}

/// Omega^(5) = f^j_{i1 [i2} f^k_{i3 i4]} d_{jk i5}, the normalization of the
/// su(3) and su(4) five-cocycle tables. Zero for su(2).
pub fn omega5(f: &AltTensor, d: &SymTensor) -> Result<AltTensor> {
    if d.order() != 3 {
        return Err(LieError::Shape("omega5 needs the order-3 d tensor".into()));
    }
    if d.is_empty() {
        return Ok(AltTensor::zeros(5, f.dim()));
    }
    cocycle_from_sym(f, d)
}

/// Omega^(7)_{i1..i7} = (1/7!) eps C_{j1j2}^{l1} C_{j3j4}^{l2} C_{j5j6}^{l3} d4_{l1 l2 l3 j7}.
/// With `d` of order 3 the unsymmetrized chain d4_{l1l2l3j} = d_{l1 l2 s} d_{s l3 j}
/// is used; with an order-4 tensor that tensor is used as given.
pub fn omega7_su(f: &AltTensor, d: &SymTensor) -> Result<AltTensor> {
    let r = f.dim();
    let mut out = AltTensor::zeros(7, r);
    if d.is_empty() || r < 7 {
        return Ok(out);
    }
    check_budget(|| format!("order-7 cocycle over dimension {r}"), combinat::strict_count(r, 7))?;
    let b = Brackets::new(f);
    let d4: Box<dyn Fn(&[u8], u8) -> f64> = match d.order() {
        3 => {
            let sp = SymPairs::new(d);
            Box::new(move |ls: &[u8], e: u8| {
                let mut s = 0.0;
                for &(x, v1) in sp.pair(ls[0], ls[1]) {
                    for &(y, v2) in sp.pair(x, ls[2]) {
                        if y == e {
                            s += v1 * v2;
                        }
                    }
                }
                s
            })
        }
        4 => {
            let dd = d.to_dense()?;
            Box::new(move |ls: &[u8], e: u8| lookup_sym(&dd, ls, e))
        }
        o => return Err(LieError::Shape(format!("omega7_su needs d of order 3 or 4, got {o}"))),
    };
    // 2^3 for the order inside each pair; the pair order is enumerated.
    let coef = 8.0 / combinat::factorial(7);
    let mut idx: Index = (0..7u8).collect();
    loop {
        let mut total = 0.0;
        for p in 0..7 {
            let sign = if (6 - p) % 2 == 0 { 1.0 } else { -1.0 };
            let e = idx[p];
            let mut rest: Index = Index::with_capacity(6);
            rest.extend_from_slice(&idx[..p]);
            rest.extend_from_slice(&idx[p + 1..]);
            ordered_pairs_rec(&b, &rest, &mut Index::new(), sign, &mut |ls, v| total += v * d4(ls, e));
        }
        out.set_sorted(idx.clone(), coef * total);
        if !combinat::next_strict(&mut idx, r) {
            break;
        }
    }
    Ok(out)
}

/// Like `matchings_rec` but over ordered sequences of pairs.
fn ordered_pairs_rec(b: &Brackets, elems: &[u8], labels: &mut Index, val: f64, leaf: &mut impl FnMut(&[u8], f64)) {
    if elems.is_empty() {
        leaf(labels, val);
        return;
    }
    let n = elems.len();
    for i in 0..n {
        for k in i + 1..n {
            let list = b.pair(elems[i], elems[k]);
            if list.is_empty() {
                continue;
            }
            // Moving elems[i], elems[k] to the front: i + (k - 1) transpositions.
            let sign = if (i + k - 1) % 2 == 0 { 1.0 } else { -1.0 };
            let mut rest: Index = Index::with_capacity(n - 2);
            rest.extend(elems.iter().enumerate().filter(|&(j, _)| j != i && j != k).map(|(_, &x)| x));
            for &(l, c) in list {
                labels.push(l);
                ordered_pairs_rec(b, &rest, labels, sign * val * c, leaf);
                labels.pop();
            }
        }
    }
}

/// Signed sum over all orderings of `bset` of w(ordering).
fn alt_sum(bset: &[u8], w: &mut impl FnMut(&[u8]) -> Vec<(u8, f64)>, acc: &mut Vec<(u8, f64)>) {
    let n = bset.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut word = vec![0u8; n];
    // Heap's algorithm with sign tracking.
    let mut c = vec![0usize; n];
    let mut sign = 1.0;
    let mut emit = |perm: &[usize], sign: f64, acc: &mut Vec<(u8, f64)>| {
        for (t, &p) in perm.iter().enumerate() {
            word[t] = bset[p];
        }
        for (s, v) in w(&word) {
            acc.push((s, sign * v));
        }
    };
    emit(&perm, sign, acc);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            emit(&perm, sign, acc);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn merge_sparse(mut v: Vec<(u8, f64)>) -> Vec<(u8, f64)> {
    v.sort_by_key(|x| x.0);
    let mut out: Vec<(u8, f64)> = Vec::new();
    for (s, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == s => last.1 += x,
            _ => out.push((s, x)),
        }
    }
    out.retain(|x| x.1.abs() > 1e-14);
    out
}

/// Omega_new(I) = (1/q!) eps Omega_prev_{A}^s W_s(B), |B| = tail size,
/// where W is antisymmetrized over B by `alt_sum`.
fn recurrence(prev: &AltTensor, tail: usize, w_alt: &[Vec<(u8, f64)>]) -> Result<AltTensor> {
    let r = prev.dim();
    let a_len = prev.order() - 1;
    let q = a_len + tail;
    let mut out = AltTensor::zeros(q, r);
    if q > r || prev.is_empty() {
        return Ok(out);
    }
    check_budget(|| format!("order-{q} cocycle over dimension {r}"), combinat::strict_count(r, q))?;
    let pd = prev.to_dense()?;
    let coef = combinat::factorial(a_len) / combinat::factorial(q);
    let mut idx: Index = (0..q as u8).collect();
    let mut pos: Index = (0..tail as u8).collect();
    let mut a = Index::with_capacity(a_len + 1);
    let mut bset = Index::with_capacity(tail);
    loop {
        let mut total = 0.0;
        pos.clear();
        pos.extend(0..tail as u8);
        loop {
            bset.clear();
            bset.extend(pos.iter().map(|&p| idx[p as usize]));
            let list = &w_alt[combinat::strict_rank(&bset)];
            if !list.is_empty() {
                a.clear();
                let mut bpos = 0;
                // sign of (A, B) relative to I: count inversions between B and later A.
                let mut inv = 0usize;
                for (t, &x) in idx.iter().enumerate() {
                    if bpos < tail && pos[bpos] as usize == t {
                        bpos += 1;
                    } else {
                        a.push(x);
                        inv += bpos;
                    }
                }
                let sign = if inv % 2 == 0 { 1.0 } else { -1.0 };
                for &(s, wv) in list {
                    a.push(s);
                    total += sign * wv * pd.at(&a);
                    a.pop();
                }
            }
            if !combinat::next_strict(&mut pos, q) {
                break;
            }
        }
        out.set_sorted(idx.clone(), coef * total);
        if !combinat::next_strict(&mut idx, r) {
            break;
        }
    }
    Ok(out)
}

/// Omega^(2m-1) = (1/(2m-1)!) eps Omega^(2m-3)_{j..}^s C^l_{j j} d_{s l j}.
pub fn recurrence_su(prev: &AltTensor, f: &AltTensor, d: &SymTensor) -> Result<AltTensor> {
    if d.order() != 3 || prev.dim() != f.dim() || d.dim() != f.dim() {
        return Err(LieError::Shape("recurrence_su needs matching f, order-3 d and a cocycle".into()));
    }
    if prev.order() % 2 == 0 || prev.order() < 3 {
        return Err(LieError::OrderOutOfRange { op: "recurrence_su", order: prev.order(), range: "odd >= 3" });
    }
    let r = f.dim();
    let b = Brackets::new(f);
    let sp = SymPairs::new(d);
    let mut w_alt = vec![Vec::new(); combinat::strict_count(r, 3) as usize];
    if r >= 3 {
        for bset in combinat::strict_tuples(r, 3) {
            let mut acc = Vec::new();
            alt_sum(
                &bset,
                &mut |w| {
                    let mut out = Vec::new();
                    for &(l, c) in b.pair(w[0], w[1]) {
                        for &(s, dv) in sp.pair(l, w[2]) {
                            out.push((s, c * dv));
                        }
                    }
                    out
                },
                &mut acc,
            );
            w_alt[combinat::strict_rank(&bset)] = merge_sparse(acc);
        }
    }
    recurrence(prev, 3, &w_alt)
}

/// Omega^(4p-1) = (1/(4p-1)!) eps Omega^(4p-5)_{j..}^s C^{l1}_{jj} C^{l2}_{jj} v_{s l1 l2 j}.
pub fn recurrence_bcd(prev: &AltTensor, f: &AltTensor, v: &SymTensor) -> Result<AltTensor> {
    if v.order() != 4 || prev.dim() != f.dim() || v.dim() != f.dim() {
        return Err(LieError::Shape("recurrence_bcd needs matching f, order-4 v and a cocycle".into()));
    }
    if prev.order() % 4 != 3 {
        return Err(LieError::OrderOutOfRange { op: "recurrence_bcd", order: prev.order(), range: "3, 7, 11, .." });
    }
    let r = f.dim();
    let b = Brackets::new(f);
    let q = prev.order() + 4;
    if q > r {
        return Ok(AltTensor::zeros(q, r));
    }
    let vd = v.to_dense()?;
    let mut w_alt = vec![Vec::new(); combinat::strict_count(r, 5) as usize];
    for bset in combinat::strict_tuples(r, 5) {
        let mut acc = Vec::new();
        alt_sum(
            &bset,
            &mut |w| {
                let mut out = Vec::new();
                for &(l1, c1) in b.pair(w[0], w[1]) {
                    for &(l2, c2) in b.pair(w[2], w[3]) {
                        for s in 0..r as u8 {
                            let vv = vd.at(&[s, l1, l2, w[4]]);
                            if vv != 0.0 {
                                out.push((s, c1 * c2 * vv));
                            }
                        }
                    }
                }
                out
            },
            &mut acc,
        );
        w_alt[combinat::strict_rank(&bset)] = merge_sparse(acc);
    }
    recurrence(prev, 5, &w_alt)
}

/// Ad-invariance residual of a skewsymmetric tensor.
pub fn check_invariance(t: &AltTensor, f: &AltTensor) -> Result<f64> {
    alt_invariance(t, &Brackets::new(f))
}

/// Max entry of eps C^{l1} .. C^{lm} h_{l1..lm} over all 2m slots (unit weight).
pub fn check_lemma31(f: &AltTensor, h: &SymTensor) -> Result<f64> {
    let m = h.order();
    let r = f.dim();
    let q = 2 * m;
    if q > r || h.is_empty() {
        return Ok(0.0);
    }
    check_budget(|| format!("order-{q} antisymmetrization over dimension {r}"), combinat::strict_count(r, q))?;
    let b = Brackets::new(f);
    let hd = h.to_dense()?;
    let coef = 2f64.powi(m as i32) * combinat::factorial(m) / combinat::factorial(q);
    let mut worst: f64 = 0.0;
    let mut idx: Index = (0..q as u8).collect();
    let mut labels = Index::new();
    loop {
        let mut total = 0.0;
        labels.clear();
        matchings_rec(&b, &idx, &mut labels, 1.0, &mut |ls, v| {
            let mut key: Index = Index::from_slice(ls);
            key.sort_unstable();
            total += v * hd.at_sorted(&key);
        });
        worst = worst.max((coef * total).abs());
        if !combinat::next_strict(&mut idx, r) {
            break;
        }
    }
    Ok(worst)
}

/// Best scalar c with a = c b: the ratio at b's largest entry, plus the max
/// deviation |a - c b|. `None` when b vanishes.
pub fn proportionality_alt(a: &AltTensor, b: &AltTensor) -> Option<(f64, f64)> {
    let (key, bv) = b.iter().fold((None, 0.0f64), |(k, m), (key, v)| if v.abs() > m.abs() { (Some(key), v) } else { (k, m) });
    let key = key?;
    let c = a.get_sorted(key) / bv;
    Some((c, a.max_abs_diff(&b.scaled(c))))
}

/// Symmetric version of [`proportionality_alt`].
pub fn proportionality_sym(a: &SymTensor, b: &SymTensor) -> Option<(f64, f64)> {
    let (key, bv) = b.iter().fold((None, 0.0f64), |(k, m), (key, v)| if v.abs() > m.abs() { (Some(key), v) } else { (k, m) });
    let key = key?;
    let c = a.get_sorted(key) / bv;
    Some((c, a.max_abs_diff(&b.scaled(c))))
}
