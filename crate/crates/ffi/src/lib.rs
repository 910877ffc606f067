//! C interface to `lieinv`.
//!
//! Algebras and tensors are opaque handles created by `lieinv_*_new` style
//! calls and released with the matching `_free`. Every fallible call
//! returns a [`LieinvStatus`]; on failure `lieinv_last_error` gives a
//! message for the calling thread. Strings returned through `char **` are
//! owned by the caller and released with `lieinv_string_free`. Indices are
//! 1-based, as in the text file format.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lieinv::algebra::{build_algebra, AlgebraSpec, GeneratorSet};
use lieinv::io::{self, AnyTensor};
use lieinv::structure::structure_constants;
use lieinv::suite::{named_tensor, verify_algebra, VerifyOptions};
use lieinv::tensor::AltTensor;
use lieinv::ttensor::{k_scalar, t_tensor};
use lieinv::LieError;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieinvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Unsupported = 3,
    Budget = 4,
    CheckFailed = 5,
    Parse = 6,
    Io = 7,
    Internal = 8,
}

/// An algebra in its defining representation with its structure constants.
pub struct LieinvAlgebra {
    g: GeneratorSet,
    f: AltTensor,
}

/// A sparse symmetric or antisymmetric tensor.
pub struct LieinvTensor {
    tensor: AnyTensor,
    algebra: String,
    // entries in canonical order, for indexed access
    entries: Vec<(Vec<u32>, f64)>,
}

impl LieinvTensor {
    fn new(tensor: AnyTensor, algebra: String) -> Self {
        let entries = tensor.entries().into_iter().map(|(k, v)| (k.iter().map(|&i| u32::from(i) + 1).collect(), v)).collect();
        LieinvTensor { tensor, algebra, entries }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn status_of(e: &LieError) -> LieinvStatus {
    match e {
        LieError::BadLabel(_) | LieError::Shape(_) | LieError::OrderOutOfRange { .. } => LieinvStatus::InvalidArgument,
        LieError::UnsupportedRank { .. } | LieError::UnsupportedFamily { .. } => LieinvStatus::Unsupported,
        LieError::Budget { .. } => LieinvStatus::Budget,
        LieError::Parse { .. } => LieinvStatus::Parse,
        LieError::Io { .. } => LieinvStatus::Io,
        _ => LieinvStatus::Internal,
    }
}

/// Run `body`, turning errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (LieinvStatus, String)>) -> LieinvStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            LieinvStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            LieinvStatus::Internal
        }
    }
}

fn lie(e: LieError) -> (LieinvStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (LieinvStatus, String) {
    (LieinvStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (LieinvStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (LieinvStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), (LieinvStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn lieinv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Build an algebra from a label such as "su3", "so5", "sp3" or "D4".
///
/// # Safety
/// `label` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lieinv_algebra_new(label: *const c_char, out: *mut *mut LieinvAlgebra) -> LieinvStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let spec = AlgebraSpec::parse(read_str(label, "label")?).map_err(lie)?;
        let g = build_algebra(&spec).map_err(lie)?;
        let f = structure_constants(&g).map_err(lie)?;
        put(out, Box::into_raw(Box::new(LieinvAlgebra { g, f })), "out")
    })
}

/// # Safety
/// `alg` must come from `lieinv_algebra_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lieinv_algebra_free(alg: *mut LieinvAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Dimension of the algebra and size of its defining matrices.
///
/// # Safety
/// `alg` must be a live handle; `dim` and `matrix_size` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lieinv_algebra_dims(alg: *const LieinvAlgebra, dim: *mut usize, matrix_size: *mut usize) -> LieinvStatus {
    guard(|| {
        let a = alg.as_ref().ok_or_else(|| null("alg"))?;
        put(dim, a.g.dim(), "dim")?;
        put(matrix_size, a.g.n(), "matrix_size")
    })
}

/// A tensor by short name: "f", "d", "v", "pf", "delta", "k<m>", "d<m>",
/// "v<m>", "omega<q>" or "t<m>". With `pfaffian` nonzero the Pfaffian
/// member is used where two cocycles of D_l share an order.
///
/// # Safety
/// `alg` must be a live handle, `name` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lieinv_tensor_new(alg: *const LieinvAlgebra, name: *const c_char, pfaffian: c_int, out: *mut *mut LieinvTensor) -> LieinvStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let a = alg.as_ref().ok_or_else(|| null("alg"))?;
        let name = read_str(name, "name")?;
        let t = named_tensor(&a.g, &a.f, name, pfaffian != 0).map_err(lie)?;
        put(out, Box::into_raw(Box::new(LieinvTensor::new(t, a.g.spec.label.clone()))), "out")
    })
}

/// # Safety
/// `t` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lieinv_tensor_free(t: *mut LieinvTensor) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Shape of a tensor: `is_alt` is 1 for antisymmetric, 0 for symmetric.
///
/// # Safety
/// `t` must be a live handle and the outputs valid pointers.
#[no_mangle]
pub unsafe extern "C" fn lieinv_tensor_shape(
    t: *const LieinvTensor,
    is_alt: *mut c_int,
    order: *mut usize,
    dim: *mut usize,
    nnz: *mut usize,
) -> LieinvStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null("tensor"))?;
        put(is_alt, c_int::from(t.tensor.kind() == io::Kind::Alt), "is_alt")?;
        put(order, t.tensor.order(), "order")?;
        put(dim, t.tensor.dim(), "dim")?;
        put(nnz, t.entries.len(), "nnz")
    })
}

/// The k-th stored entry in canonical order: `order` 1-based indices are
/// written to `indices` and the value to `value`.
///
/// # Safety
/// `indices` must have room for `order` values.
#[no_mangle]
pub unsafe extern "C" fn lieinv_tensor_entry(t: *const LieinvTensor, k: usize, indices: *mut u32, value: *mut f64) -> LieinvStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null("tensor"))?;
        let (idx, v) = t.entries.get(k).ok_or_else(|| (LieinvStatus::InvalidArgument, format!("entry {k} out of range")))?;
        if indices.is_null() {
            return Err(null("indices"));
        }
        ptr::copy_nonoverlapping(idx.as_ptr(), indices, idx.len());
        put(value, *v, "value")
    })
}

/// Value at arbitrary 1-based indices (any order; antisymmetric tensors
/// carry the permutation sign).
///
/// # Safety
/// `indices` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn lieinv_tensor_get(t: *const LieinvTensor, indices: *const u32, len: usize, value: *mut f64) -> LieinvStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null("tensor"))?;
        if indices.is_null() {
            return Err(null("indices"));
        }
        if len != t.tensor.order() {
            return Err((LieinvStatus::InvalidArgument, format!("expected {} indices, got {len}", t.tensor.order())));
        }
        let raw = std::slice::from_raw_parts(indices, len);
        let dim = t.tensor.dim();
        let mut idx = Vec::with_capacity(len);
        for &i in raw {
            if i == 0 || i as usize > dim {
                return Err((LieinvStatus::InvalidArgument, format!("index {i} outside 1..={dim}")));
            }
            idx.push(i as usize - 1);
        }
        let v = match &t.tensor {
            AnyTensor::Sym(s) => s.get(&idx),
            AnyTensor::Alt(a) => a.get(&idx),
        };
        put(value, v, "value")
    })
}

/// K = t.t for a symmetric tensor (all index tuples summed).
///
/// # Safety
/// `t` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lieinv_tensor_norm_sq(t: *const LieinvTensor, out: *mut f64) -> LieinvStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null("tensor"))?;
        match &t.tensor {
            AnyTensor::Sym(s) => put(out, k_scalar(s), "out"),
            AnyTensor::Alt(a) => put(out, a.iter().map(|(_, v)| v * v).sum::<f64>() * lieinv::combinat::factorial(a.order()), "out"),
        }
    })
}

/// t-tensor of a cocycle handle, contracted with the structure constants of
/// `alg`.
///
/// # Safety
/// Both handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lieinv_t_tensor(alg: *const LieinvAlgebra, cocycle: *const LieinvTensor, out: *mut *mut LieinvTensor) -> LieinvStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let a = alg.as_ref().ok_or_else(|| null("alg"))?;
        let c = cocycle.as_ref().ok_or_else(|| null("cocycle"))?;
        let AnyTensor::Alt(om) = &c.tensor else {
            return Err((LieinvStatus::InvalidArgument, "t-tensor needs an antisymmetric tensor".into()));
        };
        let t = t_tensor(om, &a.f).map_err(lie)?;
        put(out, Box::into_raw(Box::new(LieinvTensor::new(t.into(), a.g.spec.label.clone()))), "out")
    })
}

/// Serialize in the text format (`exact` nonzero adds radical forms).
///
/// # Safety
/// `t` must be live; `*out` receives a string to free with
/// `lieinv_string_free`.
#[no_mangle]
pub unsafe extern "C" fn lieinv_tensor_export(t: *const LieinvTensor, exact: c_int, out: *mut *mut c_char) -> LieinvStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null("tensor"))?;
        put(out, to_c_string(io::to_text(&t.tensor, &t.algebra, exact != 0)), "out")
    })
}

/// Parse the text format. Parse errors report the offending line.
///
/// # Safety
/// `text` must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lieinv_tensor_import(text: *const c_char, out: *mut *mut LieinvTensor) -> LieinvStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let file = io::parse_text(read_str(text, "text")?).map_err(lie)?;
        put(out, Box::into_raw(Box::new(LieinvTensor::new(file.tensor, file.algebra))), "out")
    })
}

/// Run every check for the algebra. `failed` receives the number of failed
/// checks and `report_json`, if not null, a JSON array of reports. Returns
/// `CheckFailed` when any check fails.
///
/// # Safety
/// `alg` must be live; `failed` valid; `report_json` null or valid.
#[no_mangle]
pub unsafe extern "C" fn lieinv_verify(
    alg: *const LieinvAlgebra,
    tolerance: f64,
    seed: u64,
    failed: *mut usize,
    report_json: *mut *mut c_char,
) -> LieinvStatus {
    guard(|| {
        let a = alg.as_ref().ok_or_else(|| null("alg"))?;
        if !(tolerance > 0.0) {
            return Err((LieinvStatus::InvalidArgument, "tolerance must be positive".into()));
        }
        let opts = VerifyOptions { tolerance, seed, ..Default::default() };
        let reps = verify_algebra(&a.g.spec, &opts).map_err(lie)?;
        let bad = reps.iter().filter(|r| !r.pass).count();
        put(failed, bad, "failed")?;
        if !report_json.is_null() {
            *report_json = to_c_string(serde_json::to_string(&reps).map_err(|e| (LieinvStatus::Internal, e.to_string()))?);
        }
        if bad > 0 {
            let names: Vec<&str> = reps.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
            return Err((LieinvStatus::CheckFailed, format!("{bad} checks failed: {}", names.join("; "))));
        }
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lieinv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
