use std::ffi::{c_char, CStr};
use std::ptr;

use cellrep_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    cellrep_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let e = cellrep_last_error();
    assert!(!e.is_null());
    CStr::from_ptr(e).to_string_lossy().into_owned()
}

#[test]
fn algebra_handle() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(cellrep_algebra_new_star(3, &mut a), CellrepStatus::Ok);
        assert!(cellrep_last_error().is_null());
        let mut d = 0;
        assert_eq!(cellrep_algebra_dimension(a, &mut d), CellrepStatus::Ok);
        assert_eq!(d, 14);
        let mut h = 0;
        assert_eq!(cellrep_algebra_hom_dim(a, 0, 0, &mut h), CellrepStatus::Ok);
        assert_eq!(h, 2);
        assert_eq!(cellrep_algebra_hom_dim(a, 1, 2, &mut h), CellrepStatus::Ok);
        assert_eq!(h, 0);
        assert_eq!(
            cellrep_algebra_hom_dim(a, 4, 0, &mut h),
            CellrepStatus::InvalidArgument
        );
        assert!(last_error().contains("out of range"));
        cellrep_algebra_free(a);
    }
}

#[test]
fn classification_handle() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(
            cellrep_classify(
                4,
                CELLREP_SIDE_LEFT,
                CELLREP_TIER_PROJECTIVE_FUNCTOR,
                &mut r
            ),
            CellrepStatus::Ok
        );
        let mut count = 0;
        let mut oracle = 0;
        assert_eq!(cellrep_report_count(r, &mut count), CellrepStatus::Ok);
        assert_eq!(
            cellrep_report_oracle_count(r, &mut oracle),
            CellrepStatus::Ok
        );
        assert_eq!((count, oracle), (15, 15));
        let mut s = ptr::null_mut();
        assert_eq!(cellrep_report_to_json(r, &mut s), CellrepStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["count"], 15);
        cellrep_report_free(r);

        assert_eq!(
            cellrep_classify(3, CELLREP_SIDE_RIGHT, CELLREP_TIER_COMBINATORIAL, &mut r),
            CellrepStatus::Ok
        );
        assert_eq!(
            cellrep_report_oracle_count(r, &mut oracle),
            CellrepStatus::Ok
        );
        assert_eq!(oracle, -1);
        cellrep_report_free(r);
    }
}

#[test]
fn cell_rep_json() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            cellrep_cell_rep_json(1, CELLREP_SIDE_LEFT, &mut s),
            CellrepStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["cartan"], serde_json::json!([[2, 1], [1, 1]]));
        assert_eq!(
            cellrep_cell_rep_json(2, CELLREP_SIDE_RIGHT, &mut s),
            CellrepStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["cartan"], serde_json::json!([[2]]));
    }
}

#[test]
fn bell_numbers() {
    unsafe {
        let mut b = 0;
        let got: Vec<u64> = (0..=6)
            .map(|n| {
                assert_eq!(cellrep_count_set_partitions(n, &mut b), CellrepStatus::Ok);
                b
            })
            .collect();
        assert_eq!(got, vec![1, 1, 2, 5, 15, 52, 203]);
        assert_eq!(
            cellrep_count_set_partitions(40, &mut b),
            CellrepStatus::InvalidArgument
        );
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(
            cellrep_algebra_new_star(0, &mut a),
            CellrepStatus::InvalidArgument
        );
        assert!(last_error().contains("at least 1"));
        assert!(a.is_null());
        assert_eq!(
            cellrep_algebra_new_star(1, ptr::null_mut()),
            CellrepStatus::NullPointer
        );
        let mut d = 0;
        assert_eq!(
            cellrep_algebra_dimension(ptr::null(), &mut d),
            CellrepStatus::NullPointer
        );
        let mut r = ptr::null_mut();
        assert_eq!(
            cellrep_classify(2, 7, 1, &mut r),
            CellrepStatus::InvalidArgument
        );
        assert!(last_error().contains("side"));
        assert_eq!(
            cellrep_classify(2, 0, 9, &mut r),
            CellrepStatus::InvalidArgument
        );
        assert!(last_error().contains("tier"));
        // freeing NULL is a no-op
        cellrep_algebra_free(ptr::null_mut());
        cellrep_report_free(ptr::null_mut());
        cellrep_string_free(ptr::null_mut());
    }
}
