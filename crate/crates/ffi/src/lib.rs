//! C interface to qcstab.
//!
//! Every function returns a [`QcstabStatus`]; results travel through out
//! pointers. On failure [`qcstab_last_error_message`] describes the error
//! for the calling thread. Strings handed out by the library are released
//! with [`qcstab_string_free`], codes with [`qcstab_code_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qcstab::cli::config::{HSource, Selector, Settings};
use qcstab::cli::report::evaluate;
use qcstab::cyclic::{cyclotomic_cosets, Distance, DistanceOptions, DEFAULT_BUDGET, DEFAULT_MC_SAMPLES};
use qcstab::error::Error;
use qcstab::field::Field;
use qcstab::poly::Poly;
use qcstab::qc::{check_self_orth_condition, verify_orthogonality, DualForm, QcCode};
use qcstab::quantum::derive_params;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcstabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// Bad characteristic, degree or modulus, or a field too large.
    InvalidField = 4,
    NotCoprime = 5,
    NotADivisor = 6,
    NotMonic = 7,
    DegreeTooLarge = 8,
    WrongFieldForHermitian = 9,
    InadmissibleH = 10,
    NotSelfOrthogonal = 11,
    BudgetExceeded = 12,
    PreconditionViolated = 13,
    /// Any other library error.
    Other = 14,
    /// A panic was caught at the boundary.
    Internal = 15,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcstabForm {
    Symplectic = 0,
    Euclidean = 1,
    Hermitian = 2,
}

impl From<QcstabForm> for DualForm {
    fn from(f: QcstabForm) -> DualForm {
        match f {
            QcstabForm::Symplectic => DualForm::Symplectic,
            QcstabForm::Euclidean => DualForm::Euclidean,
            QcstabForm::Hermitian => DualForm::Hermitian,
        }
    }
}

/// Stabilizer code parameters [[n, k, d]]_q.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct QcstabParams {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    /// Certified lower bound on d; meaningful only when `d_known` is set.
    /// UINT64_MAX stands for an infinite distance.
    pub d_lower: u64,
    pub d_known: bool,
}

/// Opaque handle to a validated quasi-cyclic code.
pub struct QcstabCode {
    code: QcCode,
    p: u64,
    r: u32,
    f: String,
    g: String,
    h: String,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QcstabStatus {
    use QcstabStatus as S;
    match e {
        Error::NonPrimeP(_) | Error::DegreeZero | Error::FieldTooLarge { .. } | Error::ReducibleModulus => {
            S::InvalidField
        }
        Error::NotCoprime { .. } => S::NotCoprime,
        Error::NotADivisor(_) => S::NotADivisor,
        Error::NotMonic(_) => S::NotMonic,
        Error::DegreeTooLarge { .. } => S::DegreeTooLarge,
        Error::WrongFieldForHermitian => S::WrongFieldForHermitian,
        Error::InadmissibleH => S::InadmissibleH,
        Error::NotSelfOrthogonal(_) => S::NotSelfOrthogonal,
        Error::BudgetExceeded { .. } => S::BudgetExceeded,
        Error::PreconditionViolated(_) => S::PreconditionViolated,
        Error::Parse(_) => S::Parse,
        _ => S::Other,
    }
}

struct Failure(QcstabStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure(status_of(&e), e.to_string())
    }
}

/// Runs `body`, recording any error or panic for the calling thread.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> QcstabStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => QcstabStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            QcstabStatus::Internal
        }
    }
}

fn null() -> Failure {
    Failure(QcstabStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(QcstabStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn code_ref<'a>(c: *const QcstabCode) -> Result<&'a QcstabCode, Failure> {
    c.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("json has no nul").into_raw()
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qcstab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds Q(f, g, h) over GF(p^r) with polynomials in the text syntax of
/// the command line, e.g. "x^3 + x + 1" or "z^5*x + 1".
///
/// # Safety
/// `f`, `g`, `h` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcstab_code_new(
    p: u64,
    r: u32,
    n: usize,
    f: *const c_char,
    g: *const c_char,
    h: *const c_char,
    out: *mut *mut QcstabCode,
) -> QcstabStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let (fs, gs, hs) = (text(f)?, text(g)?, text(h)?);
        let field = Field::new(p, r)?;
        let code = QcCode::new(
            &field,
            n,
            &Poly::parse(&field, fs)?,
            &Poly::parse(&field, gs)?,
            &Poly::parse(&field, hs)?,
        )?;
        let boxed = Box::new(QcstabCode {
            code,
            p,
            r,
            f: fs.to_string(),
            g: gs.to_string(),
            h: hs.to_string(),
        });
        write(out, Box::into_raw(boxed))
    })
}

/// Releases a code; NULL is ignored.
///
/// # Safety
/// `code` must come from [`qcstab_code_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qcstab_code_free(code: *mut QcstabCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Dimension 2n - deg f - deg g of the classical code.
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcstab_code_dimension(code: *const QcstabCode, out: *mut usize) -> QcstabStatus {
    guard(|| write(out, code_ref(code)?.code.dimension()))
}

/// Whether the divisibility condition for self-orthogonality holds.
///
/// # Safety
/// `code` must be a live handle and `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn qcstab_code_check(
    code: *const QcstabCode,
    form: QcstabForm,
    holds: *mut bool,
) -> QcstabStatus {
    guard(|| {
        let c = code_ref(code)?;
        let form = DualForm::from(form);
        if form == DualForm::Hermitian {
            c.code.hermitian_q()?;
        }
        write(holds, check_self_orth_condition(&c.code, form).holds)
    })
}

/// Whether the dual lies inside the code, decided by linear algebra.
///
/// # Safety
/// `code` must be a live handle and `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn qcstab_code_verify(
    code: *const QcstabCode,
    form: QcstabForm,
    holds: *mut bool,
) -> QcstabStatus {
    guard(|| write(holds, verify_orthogonality(&code_ref(code)?.code, form.into())?.holds()))
}

/// Stabilizer parameters under the form. Fails with NotSelfOrthogonal
/// unless both the condition and the rank check pass.
///
/// # Safety
/// `code` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcstab_code_params(
    code: *const QcstabCode,
    form: QcstabForm,
    out: *mut QcstabParams,
) -> QcstabStatus {
    guard(|| {
        let d = derive_params(&code_ref(code)?.code, form.into(), &DistanceOptions::default())?;
        let p = &d.params;
        let (d_lower, d_known) = match p.d_lower {
            Some(Distance::Finite(v)) => (v, true),
            Some(Distance::Infinite) => (u64::MAX, true),
            None => (0, false),
        };
        write(
            out,
            QcstabParams {
                n: p.n,
                k: p.k,
                q: p.q,
                d_lower,
                d_known,
            },
        )
    })
}

/// Full JSON report, the same document `qcstab check` prints. A budget of
/// 0 selects the default enumeration budget.
///
/// # Safety
/// `code` must be a live handle and `out` writable; free the string with
/// [`qcstab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qcstab_code_report_json(
    code: *const QcstabCode,
    form: QcstabForm,
    budget: u64,
    out: *mut *mut c_char,
) -> QcstabStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let c = code_ref(code)?;
        let form = DualForm::from(form);
        let settings = Settings {
            n: c.code.n(),
            p: c.p,
            r: c.r,
            f: Selector::Poly(c.f.clone()),
            g: Selector::Poly(c.g.clone()),
            h: HSource::Poly(c.h.clone()),
            forms: vec![form],
            budget: if budget == 0 { DEFAULT_BUDGET } else { budget },
            mc_samples: DEFAULT_MC_SAMPLES,
            seed: 0,
            workers: None,
            all_pairs: false,
            f_pool: None,
            g_pool: None,
        };
        let q = &c.code;
        let report = evaluate(
            &settings,
            q.field(),
            q.f(),
            q.g(),
            q.h(),
            form,
            &settings.distance_options(),
        )?;
        write(
            out,
            into_c_string(serde_json::to_string(&report).expect("report serializes")),
        )
    })
}

/// The q-cyclotomic cosets modulo n, q = p^r, as a JSON array of arrays.
///
/// # Safety
/// `out` must be writable; free the string with [`qcstab_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qcstab_cosets_json(n: usize, p: u64, r: u32, out: *mut *mut c_char) -> QcstabStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let q = Field::new(p, r)?.order();
        let cosets = cyclotomic_cosets(n, q)?;
        write(
            out,
            into_c_string(serde_json::to_string(&cosets).expect("cosets serialize")),
        )
    })
}

/// Releases a string returned by this library; NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qcstab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
