//! C interface to the tame lambda computations.
//!
//! Fields are opaque handles produced by [`tl_field_new`] and released by
//! [`tl_field_free`]. Every entry point returns a [`TlStatus`]; out
//! parameters are written only when the status is OK. Roots of unity cross
//! the boundary as [`TlMu4`]: exact integer real and imaginary parts plus
//! the exponent k with value i^k.

use tame_lambda::cyclotomic::Mu4;
use tame_lambda::error::Error;
use tame_lambda::gauss::gauss_closed_quadratic;
use tame_lambda::lambda::{
    lambda_full_square_norm_class, lambda_psi_minus_one, lambda_q2, lambda_tame_quadratic,
    lambda_unramified, QuadExt,
};
use tame_lambda::local_field::TameField;

/// Result of a call across the C boundary.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    EvenCharacteristic = 3,
    UnknownSquareClass = 4,
    Internal = 5,
}

/// A fourth root of unity i^exp with its exact Gaussian-integer parts.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TlMu4 {
    pub re: i32,
    pub im: i32,
    pub exp: i32,
}

/// Opaque handle to a tame field presentation (p, f, e, w).
pub struct TlTameField {
    inner: TameField,
}

fn status_from(err: &Error) -> TlStatus {
    match err {
        Error::EvenCharacteristic => TlStatus::EvenCharacteristic,
        Error::UnknownSquareClass(_) => TlStatus::UnknownSquareClass,
        Error::Inconsistent(_) => TlStatus::Internal,
        _ => TlStatus::InvalidInput,
    }
}

fn mu4_out(v: Mu4) -> TlMu4 {
    TlMu4 {
        re: v.re(),
        im: v.im(),
        exp: v.exponent() as i32,
    }
}

unsafe fn coeff_slice<'a>(ptr: *const u64, len: usize) -> Option<&'a [u64]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

/// Builds a tame field handle for F/Q_p with residue degree `f`,
/// ramification index `e`, and unit residue w given by `w_len`
/// coefficients in the deterministic residue-field basis; an empty list
/// means w = 1.
///
/// # Safety
/// `w_coeffs` must point to `w_len` readable u64 values (or `w_len` must be
/// 0), and `out` must be a valid pointer. On OK the handle in `*out` is
/// owned by the caller and must be released with [`tl_field_free`].
#[no_mangle]
pub unsafe extern "C" fn tl_field_new(
    p: u64,
    f: u32,
    e: u32,
    w_coeffs: *const u64,
    w_len: usize,
    out: *mut *mut TlTameField,
) -> TlStatus {
    if out.is_null() {
        return TlStatus::NullPointer;
    }
    let Some(coeffs) = coeff_slice(w_coeffs, w_len) else {
        return TlStatus::NullPointer;
    };
    let coeffs = if coeffs.is_empty() { &[1][..] } else { coeffs };
    match TameField::from_w_coeffs(p, f, e, coeffs) {
        Ok(field) => {
            *out = Box::into_raw(Box::new(TlTameField { inner: field }));
            TlStatus::Ok
        }
        Err(err) => status_from(&err),
    }
}

/// Releases a handle returned by [`tl_field_new`]. A null pointer is a
/// no-op.
///
/// # Safety
/// `field` must be a pointer previously returned by [`tl_field_new`] and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tl_field_free(field: *mut TlTameField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Lambda value of the norm-normalized ramified quadratic extension of the
/// field, assembled from the squareness factor at the admissible c with the
/// given unit residue (empty list: unit residue 1) and the closed Gauss
/// factor. The factor outputs may be null when not wanted.
///
/// # Safety
/// `field` must be a live handle from [`tl_field_new`]; `c_unit` must point
/// to `c_len` readable u64 values (or `c_len` must be 0); `out_value` must
/// be valid; `out_delta` and `out_gauss` must each be valid or null.
#[no_mangle]
pub unsafe extern "C" fn tl_lambda_tame(
    field: *const TlTameField,
    c_unit: *const u64,
    c_len: usize,
    out_value: *mut TlMu4,
    out_delta: *mut TlMu4,
    out_gauss: *mut TlMu4,
) -> TlStatus {
    if field.is_null() || out_value.is_null() {
        return TlStatus::NullPointer;
    }
    let Some(c_coeffs) = coeff_slice(c_unit, c_len) else {
        return TlStatus::NullPointer;
    };
    let field = &(*field).inner;
    let ext = match QuadExt::ramified(field.clone()) {
        Ok(ext) => ext,
        Err(err) => return status_from(&err),
    };
    let c = if c_coeffs.is_empty() {
        None
    } else {
        let unit = match field.residue_field().from_coeffs(c_coeffs) {
            Ok(u) => u,
            Err(err) => return status_from(&err),
        };
        match field.admissible_c(unit) {
            Ok(c) => Some(c),
            Err(err) => return status_from(&err),
        }
    };
    match lambda_tame_quadratic(&ext, c.as_ref()) {
        Ok(result) => {
            *out_value = mu4_out(result.value);
            if !out_delta.is_null() {
                *out_delta = mu4_out(result.delta_factor);
            }
            if !out_gauss.is_null() {
                *out_gauss = mu4_out(result.gauss_factor);
            }
            TlStatus::Ok
        }
        Err(err) => status_from(&err),
    }
}

/// Lambda value of the ramified quadratic extension at the conductor -1
/// character psi_{-1}: the eps of the closed quadratic Gauss form over the
/// residue field.
///
/// # Safety
/// `field` must be a live handle from [`tl_field_new`]; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_lambda_psi_minus_one(
    field: *const TlTameField,
    out: *mut TlMu4,
) -> TlStatus {
    if field.is_null() || out.is_null() {
        return TlStatus::NullPointer;
    }
    match lambda_psi_minus_one(&(*field).inner) {
        Ok(value) => {
            *out = mu4_out(value);
            TlStatus::Ok
        }
        Err(err) => status_from(&err),
    }
}

/// Lambda value of the unramified quadratic extension of the field against
/// an additive character of conductor `n`: (-1)^n.
///
/// # Safety
/// `field` must be a live handle from [`tl_field_new`]; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_lambda_unramified(
    field: *const TlTameField,
    n: i64,
    out: *mut TlMu4,
) -> TlStatus {
    if field.is_null() || out.is_null() {
        return TlStatus::NullPointer;
    }
    let ext = QuadExt::unramified((*field).inner.clone());
    match lambda_unramified(&ext, n) {
        Ok(value) => {
            *out = mu4_out(value);
            TlStatus::Ok
        }
        Err(err) => status_from(&err),
    }
}

/// Lambda value of the quadratic extension of Q_2 for one of the seven
/// nontrivial square classes 5, -1, -5, 2, 10, -2, -10.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_lambda_q2(square_class: i64, out: *mut TlMu4) -> TlStatus {
    if out.is_null() {
        return TlStatus::NullPointer;
    }
    match lambda_q2(square_class) {
        Ok(value) => {
            *out = mu4_out(value);
            TlStatus::Ok
        }
        Err(err) => status_from(&err),
    }
}

/// Lambda value of the abelian extension whose norm group is exactly the
/// squares, in residue characteristic 2: constantly 1. The norm-group
/// hypothesis is the caller's responsibility.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tl_lambda_full_square_norm_class(out: *mut TlMu4) -> TlStatus {
    if out.is_null() {
        return TlStatus::NullPointer;
    }
    *out = mu4_out(lambda_full_square_norm_class());
    TlStatus::Ok
}

/// Closed form of the quadratic Gauss sum over F_{p^s}: the value is
/// eps * p^(half_power_halves / 2).
///
/// # Safety
/// `out_eps` and `out_half_power_halves` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tl_gauss_closed(
    p: u64,
    s: u32,
    out_eps: *mut TlMu4,
    out_half_power_halves: *mut i64,
) -> TlStatus {
    if out_eps.is_null() || out_half_power_halves.is_null() {
        return TlStatus::NullPointer;
    }
    match gauss_closed_quadratic(p, s) {
        Ok(closed) => {
            *out_eps = mu4_out(closed.eps);
            *out_half_power_halves = closed.half_power.halves();
            TlStatus::Ok
        }
        Err(err) => status_from(&err),
    }
}
