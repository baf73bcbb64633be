//! C interface to `chained-rooks`.
//!
//! Objects cross the boundary as opaque handles and as canonical JSON
//! documents. Every fallible function returns a [`CrStatus`]; after a
//! failure, [`cr_last_error`] describes it. Strings handed out must be
//! released with [`cr_string_free`], handles with their own `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ops::ControlFlow;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chained_rooks::asm::{count_chained_asm, visit_chained_asm, ChainedAsm, Limits};
use chained_rooks::counting::{count_max_circular, count_max_linear, count_placements_formula};
use chained_rooks::io::{convert, render, Document, Form, Format};
use chained_rooks::placements::{count_placements_brute, visit_placements, ChainedPermutation, RookPlacement};
use chained_rooks::{BoardSpec, Error, Shape};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrStatus {
    Ok = 0,
    NullArgument = 1,
    /// Out-of-range board size, index or enum value.
    InvalidArgument = 2,
    /// The operation is not defined for this board or object.
    Unsupported = 3,
    Parse = 4,
    /// An object failed its validator.
    Invalid = 5,
    /// A well-formed object is not of the kind required, e.g. an ASM with a
    /// -1 entry where a permutation is needed.
    Constraint = 6,
    Internal = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrShape {
    Linear = 0,
    Circular = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrCountMethod {
    /// The general sum over compositions, any m.
    Formula = 0,
    /// The product formula, maximum m only.
    Closed = 1,
    Brute = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrForm {
    Matrix = 0,
    OneLine = 1,
    Matching = 2,
    Asm = 3,
    Mt = 4,
    Ice = 5,
    Fpl = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrFormat {
    Ascii = 0,
    Dot = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrFamily {
    Placements = 0,
    Permutations = 1,
    Asm = 2,
}

/// Pass as `m` to mean the maximum number of rooks.
pub const CR_MAX_ROOKS: usize = usize::MAX;

pub struct CrBoard(BoardSpec);

pub struct CrDocument(Document);

pub struct CrDocumentList(Vec<CrDocument>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CrStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Domain(_) => CrStatus::InvalidArgument,
            Error::Constraint(_) => CrStatus::Constraint,
            Error::Invalid(_) => CrStatus::Invalid,
            Error::Unsupported(_) => CrStatus::Unsupported,
            Error::Parse { .. } => CrStatus::Parse,
            Error::Invariant(_) | Error::Io(_) => CrStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CrStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside chained-rooks");
            CrStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(CrStatus::NullArgument, format!("{what} is NULL"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(CrStatus::Internal, "string contains a nul byte".into()))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL. Owned by the
/// library and valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cr_board_new(shape: CrShape, n: usize, k: usize, out: *mut *mut CrBoard) -> CrStatus {
    guard(|| {
        let shape = match shape {
            CrShape::Linear => Shape::Linear,
            CrShape::Circular => Shape::Circular,
        };
        let b = BoardSpec::new(shape, n, k)?;
        put(out, boxed(CrBoard(b)))
    })
}

/// # Safety
/// `board` must be NULL or a handle from [`cr_board_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cr_board_free(board: *mut CrBoard) {
    if !board.is_null() {
        drop(Box::from_raw(board));
    }
}

/// # Safety
/// `board` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cr_board_max_rooks(board: *const CrBoard, out: *mut usize) -> CrStatus {
    guard(|| {
        let b = borrow(board, "board")?;
        put(out, b.0.max_rooks())
    })
}

/// Number of placements of `m` non-attacking rooks, as a decimal string.
///
/// # Safety
/// `board` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cr_count_placements(
    board: *const CrBoard,
    m: usize,
    method: CrCountMethod,
    out: *mut *mut c_char,
) -> CrStatus {
    guard(|| {
        let b = borrow(board, "board")?.0;
        let max = b.max_rooks();
        let m = if m == CR_MAX_ROOKS { max } else { m };
        let c = match method {
            CrCountMethod::Formula => count_placements_formula(&b, m)?,
            CrCountMethod::Brute => count_placements_brute(&b, m)?,
            CrCountMethod::Closed if m != max => {
                return Err(Failure(
                    CrStatus::InvalidArgument,
                    format!("the closed form needs m = {max}, the maximum for {b}"),
                ))
            }
            CrCountMethod::Closed => match b.shape() {
                Shape::Linear => count_max_linear(b.n(), b.k())?,
                Shape::Circular => count_max_circular(b.n(), b.k())?,
            },
        };
        put(out, c_string(c.to_string())?)
    })
}

/// Number of chained ASMs on `board`, as a decimal string.
///
/// # Safety
/// `board` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cr_count_chained_asm(board: *const CrBoard, out: *mut *mut c_char) -> CrStatus {
    guard(|| {
        let b = borrow(board, "board")?.0;
        if b.n() > 64 {
            return Err(Failure(CrStatus::InvalidArgument, "n must be at most 64".into()));
        }
        put(out, c_string(count_chained_asm(&b).to_string())?)
    })
}

/// Parses a document. Only structure is checked; see
/// [`cr_document_validate`].
///
/// # Safety
/// `text` must be a nul-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cr_document_parse(text: *const c_char, out: *mut *mut CrDocument) -> CrStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(CrStatus::Parse, format!("document is not UTF-8: {e}")))?;
        put(out, boxed(CrDocument(Document::deserialize(text)?)))
    })
}

/// # Safety
/// `doc` must be NULL or a handle from this library, not yet freed. Handles
/// borrowed from a list must not be passed here.
#[no_mangle]
pub unsafe extern "C" fn cr_document_free(doc: *mut CrDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Canonical text of `doc`.
///
/// # Safety
/// `doc` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cr_document_serialize(doc: *const CrDocument, out: *mut *mut c_char) -> CrStatus {
    guard(|| {
        let d = borrow(doc, "document")?;
        put(out, c_string(d.0.serialize())?)
    })
}

/// Family name of `doc` as a static string, or NULL if `doc` is NULL.
///
/// # Safety
/// `doc` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cr_document_family(doc: *const CrDocument) -> *const c_char {
    let Some(d) = doc.as_ref() else {
        return ptr::null();
    };
    use chained_rooks::io::Family::*;
    let s: &'static CStr = match d.0.family() {
        Placement => c"placement",
        ChainedPermutation => c"chained-permutation",
        OneLine => c"one-line",
        Matching => c"matching",
        ChainedAsm => c"chained-asm",
        PlainAsm => c"plain-asm",
        MonotoneTriangles => c"monotone-triangles",
        Ice => c"ice",
        Fpl => c"fpl",
        Composition => c"composition",
    };
    s.as_ptr()
}

/// Returns `Ok` for a valid object and `Invalid` otherwise. When
/// `diagnostics` is not NULL it receives the problems, one per line (an
/// empty string when valid).
///
/// # Safety
/// `doc` must be a live handle; `diagnostics` NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cr_document_validate(doc: *const CrDocument, diagnostics: *mut *mut c_char) -> CrStatus {
    guard(|| {
        let d = borrow(doc, "document")?;
        let v = d.0.validate();
        if !diagnostics.is_null() {
            diagnostics.write(c_string(v.diagnostics.join("\n"))?);
        }
        if v.is_valid() {
            Ok(())
        } else {
            Err(Failure(CrStatus::Invalid, v.diagnostics.join("; ")))
        }
    })
}

/// Converts between descriptions of one chained permutation or chained ASM.
///
/// # Safety
/// `doc` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cr_document_convert(doc: *const CrDocument, to: CrForm, out: *mut *mut CrDocument) -> CrStatus {
    guard(|| {
        let d = borrow(doc, "document")?;
        let to = match to {
            CrForm::Matrix => Form::Matrix,
            CrForm::OneLine => Form::OneLine,
            CrForm::Matching => Form::Matching,
            CrForm::Asm => Form::Asm,
            CrForm::Mt => Form::Mt,
            CrForm::Ice => Form::Ice,
            CrForm::Fpl => Form::Fpl,
        };
        put(out, boxed(CrDocument(convert(&d.0, to)?)))
    })
}

/// # Safety
/// `doc` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cr_document_render(doc: *const CrDocument, format: CrFormat, out: *mut *mut c_char) -> CrStatus {
    guard(|| {
        let d = borrow(doc, "document")?;
        let format = match format {
            CrFormat::Ascii => Format::Ascii,
            CrFormat::Dot => Format::Dot,
        };
        put(out, c_string(render(&d.0, format)?)?)
    })
}

/// Every placement of `m` rooks (`CR_MAX_ROOKS` for the maximum), every
/// chained permutation, or every chained ASM on `board`, in lexicographic
/// order. `limit` caps the number collected; 0 means no cap.
///
/// # Safety
/// `board` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cr_enumerate(
    board: *const CrBoard,
    family: CrFamily,
    m: usize,
    limit: usize,
    out: *mut *mut CrDocumentList,
) -> CrStatus {
    guard(|| {
        let b = borrow(board, "board")?.0;
        let max = b.max_rooks();
        let m = if m == CR_MAX_ROOKS { max } else { m };
        let mut docs = Vec::new();
        let mut push = |d: Document| {
            docs.push(CrDocument(d));
            if limit != 0 && docs.len() >= limit {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        };
        match family {
            CrFamily::Placements => visit_placements(&b, m, |sq| {
                push(RookPlacement::new(b, sq.to_vec()).expect("squares come from the board").into())
            })?,
            CrFamily::Permutations => {
                if m != max {
                    return Err(Failure(
                        CrStatus::InvalidArgument,
                        "chained permutations always have the maximum number of rooks".into(),
                    ));
                }
                visit_placements(&b, max, |sq| {
                    let p = RookPlacement::new(b, sq.to_vec()).expect("squares come from the board");
                    push(ChainedPermutation::from_placement(&p).expect("maximum placement").into())
                })?
            }
            CrFamily::Asm => {
                visit_chained_asm(&b, Limits::default(), |cells| push(ChainedAsm::from_flat(&b, cells).into()))?;
            }
        }
        put(out, boxed(CrDocumentList(docs)))
    })
}

/// # Safety
/// `list` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cr_document_list_len(list: *const CrDocumentList) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// Borrowed element `index`, or NULL when out of range. The pointer is
/// valid until the list is freed and must not be passed to
/// [`cr_document_free`].
///
/// # Safety
/// `list` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cr_document_list_get(list: *const CrDocumentList, index: usize) -> *const CrDocument {
    list.as_ref()
        .and_then(|l| l.0.get(index))
        .map_or(ptr::null(), |d| d as *const CrDocument)
}

/// # Safety
/// `list` must be NULL or a handle from [`cr_enumerate`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cr_document_list_free(list: *mut CrDocumentList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}
