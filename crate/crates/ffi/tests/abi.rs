use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::path::Path;
use std::process::Command;
use std::ptr;

use lieinv_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(lieinv_last_error()) }.to_string_lossy().into_owned()
}

fn algebra(label: &str) -> *mut LieinvAlgebra {
    let label = CString::new(label).unwrap();
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { lieinv_algebra_new(label.as_ptr(), &mut alg) }, LieinvStatus::Ok);
    assert!(!alg.is_null());
    alg
}

fn tensor(alg: *const LieinvAlgebra, name: &str) -> Result<*mut LieinvTensor, LieinvStatus> {
    let name = CString::new(name).unwrap();
    let mut t = ptr::null_mut();
    match unsafe { lieinv_tensor_new(alg, name.as_ptr(), 0, &mut t) } {
        LieinvStatus::Ok => Ok(t),
        s => Err(s),
    }
}

fn export(t: *const LieinvTensor, exact: bool) -> String {
    let mut s: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { lieinv_tensor_export(t, i32::from(exact), &mut s) }, LieinvStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { lieinv_string_free(s) };
    text
}

#[test]
fn su3_structure_constants_through_handles() {
    let alg = algebra("su3");
    let (mut dim, mut size) = (0, 0);
    assert_eq!(unsafe { lieinv_algebra_dims(alg, &mut dim, &mut size) }, LieinvStatus::Ok);
    assert_eq!((dim, size), (8, 3));

    let f = tensor(alg, "f").unwrap();
    let (mut is_alt, mut order, mut tdim, mut nnz) = (0, 0, 0, 0);
    assert_eq!(unsafe { lieinv_tensor_shape(f, &mut is_alt, &mut order, &mut tdim, &mut nnz) }, LieinvStatus::Ok);
    assert_eq!((is_alt, order, tdim, nnz), (1, 3, 8, 9));

    let mut v = 0.0;
    assert_eq!(unsafe { lieinv_tensor_get(f, [1u32, 2, 3].as_ptr(), 3, &mut v) }, LieinvStatus::Ok);
    assert!((v - 1.0).abs() < 1e-14);
    assert_eq!(unsafe { lieinv_tensor_get(f, [2u32, 1, 3].as_ptr(), 3, &mut v) }, LieinvStatus::Ok);
    assert!((v + 1.0).abs() < 1e-14);
    assert_eq!(unsafe { lieinv_tensor_get(f, [4u32, 5, 8].as_ptr(), 3, &mut v) }, LieinvStatus::Ok);
    assert!((v - 3f64.sqrt() / 2.0).abs() < 1e-14);

    let mut idx = [0u32; 3];
    assert_eq!(unsafe { lieinv_tensor_entry(f, 0, idx.as_mut_ptr(), &mut v) }, LieinvStatus::Ok);
    assert_eq!(idx, [1, 2, 3]);
    assert_eq!(unsafe { lieinv_tensor_entry(f, 9, idx.as_mut_ptr(), &mut v) }, LieinvStatus::InvalidArgument);
    assert!(last_error().contains("out of range"));

    unsafe {
        lieinv_tensor_free(f);
        lieinv_algebra_free(alg);
    }
}

#[test]
fn t_tensor_of_omega5_is_proportional_to_d() {
    let alg = algebra("su3");
    let omega = tensor(alg, "omega5").unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { lieinv_t_tensor(alg, omega, &mut t) }, LieinvStatus::Ok);
    let d = tensor(alg, "d").unwrap();
    // t3 = (n^2/12) d for su(n)
    let (mut tv, mut dv) = (0.0, 0.0);
    for key in [[1u32, 1, 8], [1, 4, 6], [8, 8, 8], [3, 4, 4]] {
        unsafe {
            assert_eq!(lieinv_tensor_get(t, key.as_ptr(), 3, &mut tv), LieinvStatus::Ok);
            assert_eq!(lieinv_tensor_get(d, key.as_ptr(), 3, &mut dv), LieinvStatus::Ok);
        }
        assert!((tv - 0.75 * dv).abs() < 1e-12, "{key:?}: {tv} vs {dv}");
    }
    let mut k = 0.0;
    assert_eq!(unsafe { lieinv_tensor_norm_sq(t, &mut k) }, LieinvStatus::Ok);
    assert!(k > 0.0);
    unsafe {
        lieinv_tensor_free(t);
        lieinv_tensor_free(d);
        lieinv_tensor_free(omega);
        lieinv_algebra_free(alg);
    }
}

#[test]
fn export_import_round_trip_is_bit_exact() {
    let alg = algebra("so5");
    for name in ["f", "v", "omega7"] {
        let t = tensor(alg, name).unwrap();
        let text = export(t, true);
        let c = CString::new(text.clone()).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(unsafe { lieinv_tensor_import(c.as_ptr(), &mut back) }, LieinvStatus::Ok, "{}", last_error());
        assert_eq!(export(back, true), text);

        let (mut n1, mut n2) = (0usize, 0usize);
        let mut junk = (0, 0, 0);
        unsafe {
            lieinv_tensor_shape(t, &mut junk.0, &mut junk.1, &mut junk.2, &mut n1);
            lieinv_tensor_shape(back, &mut junk.0, &mut junk.1, &mut junk.2, &mut n2);
        }
        assert_eq!(n1, n2);
        let order = junk.1;
        let (mut ia, mut ib) = (vec![0u32; order], vec![0u32; order]);
        let (mut va, mut vb) = (0.0f64, 0.0f64);
        for k in 0..n1 {
            unsafe {
                lieinv_tensor_entry(t, k, ia.as_mut_ptr(), &mut va);
                lieinv_tensor_entry(back, k, ib.as_mut_ptr(), &mut vb);
            }
            assert_eq!(ia, ib);
            assert_eq!(va.to_bits(), vb.to_bits());
        }
        unsafe {
            lieinv_tensor_free(back);
            lieinv_tensor_free(t);
        }
    }
    unsafe { lieinv_algebra_free(alg) };
}

#[test]
fn parse_errors_report_the_line() {
    let text = CString::new("kind=alt order=3 dim=8 algebra=su(3)\n1 2 3 1\n3 2 1 0.5\n").unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { lieinv_tensor_import(text.as_ptr(), &mut t) }, LieinvStatus::Parse);
    assert!(t.is_null());
    let msg = last_error();
    assert!(msg.contains("line 3"), "{msg}");
}

#[test]
fn status_codes() {
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { lieinv_algebra_new(ptr::null(), &mut alg) }, LieinvStatus::NullPointer);
    let bad = CString::new("xx9").unwrap();
    assert_eq!(unsafe { lieinv_algebra_new(bad.as_ptr(), &mut alg) }, LieinvStatus::InvalidArgument);
    assert!(!last_error().is_empty());

    let so5 = algebra("so5");
    assert!(last_error().is_empty(), "success clears the message");
    assert_eq!(tensor(so5, "d"), Err(LieinvStatus::Unsupported));
    assert_eq!(tensor(so5, "nonsense"), Err(LieinvStatus::InvalidArgument));
    assert_eq!(tensor(ptr::null(), "f"), Err(LieinvStatus::NullPointer));

    let f = tensor(so5, "f").unwrap();
    let mut v = 0.0;
    assert_eq!(unsafe { lieinv_tensor_get(f, [1u32, 2].as_ptr(), 2, &mut v) }, LieinvStatus::InvalidArgument);
    assert_eq!(unsafe { lieinv_tensor_get(f, [1u32, 2, 99].as_ptr(), 3, &mut v) }, LieinvStatus::InvalidArgument);
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { lieinv_t_tensor(so5, f, &mut t) }, LieinvStatus::Ok);
    let mut tt = ptr::null_mut();
    assert_eq!(unsafe { lieinv_t_tensor(so5, t, &mut tt) }, LieinvStatus::InvalidArgument);
    assert!(tt.is_null());

    let mut failed = usize::MAX;
    assert_eq!(unsafe { lieinv_verify(so5, 0.0, 42, &mut failed, ptr::null_mut()) }, LieinvStatus::InvalidArgument);
    unsafe {
        lieinv_tensor_free(t);
        lieinv_tensor_free(f);
        lieinv_algebra_free(so5);
        lieinv_algebra_free(ptr::null_mut());
        lieinv_tensor_free(ptr::null_mut());
        lieinv_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_su3_and_an_impossible_tolerance() {
    let alg = algebra("su3");
    let mut failed = usize::MAX;
    let mut json: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { lieinv_verify(alg, 1e-9, 42, &mut failed, &mut json) }, LieinvStatus::Ok, "{}", last_error());
    assert_eq!(failed, 0);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    unsafe { lieinv_string_free(json) };
    let reps: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(reps.as_array().is_some_and(|a| !a.is_empty()));

    assert_eq!(unsafe { lieinv_verify(alg, 1e-30, 42, &mut failed, ptr::null_mut()) }, LieinvStatus::CheckFailed);
    assert!(failed > 0);
    unsafe { lieinv_algebra_free(alg) };
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/lieinv.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for sym in ["lieinv_algebra_new", "lieinv_tensor_import", "lieinv_verify", "LIEINV_STATUS_PARSE"] {
        assert!(text.contains(sym), "{sym} missing from header");
    }
    let Ok(status) = Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"]).arg(&header).status() else {
        eprintln!("no C compiler; syntax check skipped");
        return;
    };
    assert!(status.success());
}
