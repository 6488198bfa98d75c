use std::ffi::{CStr, CString};
use std::path::Path;
use std::ptr;

use hopfcyc_ffi::*;

fn manifest() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn scenario(name: &str) -> CString {
    let path = manifest().join("../core/scenarios").join(name);
    CString::new(std::fs::read_to_string(path).unwrap()).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(hc_last_error_message()) }.to_string_lossy().into_owned()
}

#[test]
fn scenario_round_trip_matches_golden() {
    let golden = std::fs::read_to_string(manifest().join("../core/scenarios/golden/pair_e2.report.json")).unwrap();
    let json = scenario("pair_e2.json");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(hc_scenario_parse(json.as_ptr(), &mut s), HcStatus::Ok);
        let mut n = 0;
        assert_eq!(hc_scenario_task_count(s, &mut n), HcStatus::Ok);
        assert_eq!(n, 8);
        let mut r = ptr::null_mut();
        assert_eq!(hc_scenario_run(s, -1, true, &mut r), HcStatus::Ok);
        assert_eq!(hc_report_exit_code(r), 0);
        let mut out = ptr::null_mut();
        assert_eq!(hc_report_json(r, &mut out), HcStatus::Ok);
        assert_eq!(CStr::from_ptr(out).to_str().unwrap(), golden);
        hc_string_free(out);
        hc_report_free(r);
        hc_scenario_free(s);
    }
}

#[test]
fn errors_map_to_codes() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(hc_scenario_parse(ptr::null(), &mut s), HcStatus::NullArgument);
        let bad = CString::new("{\"version\": 1, \"field\": }").unwrap();
        assert_eq!(hc_scenario_parse(bad.as_ptr(), &mut s), HcStatus::Parse);
        assert!(s.is_null());
        assert!(!last_error().is_empty());
        let dangling = CString::new(r#"{"version":1,"field":"Q","tasks":[{"kind":"validate","object":"nope"}]}"#).unwrap();
        assert_eq!(hc_scenario_parse(dangling.as_ptr(), &mut s), HcStatus::Reference);
        assert!(last_error().contains("nope"), "{}", last_error());
        let raw = [0xffu8, 0];
        assert_eq!(hc_scenario_parse(raw.as_ptr().cast(), &mut s), HcStatus::InvalidUtf8);
        assert_eq!(hc_report_exit_code(ptr::null()), -1);
        hc_scenario_free(ptr::null_mut());
        hc_report_free(ptr::null_mut());
        hc_string_free(ptr::null_mut());
        hc_algebroid_free(ptr::null_mut());
    }
}

#[test]
fn gallery_homology() {
    unsafe {
        let name = CString::new("trivial").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(hc_algebroid_gallery(name.as_ptr(), 0, &mut h), HcStatus::Ok);
        let (mut du, mut da) = (0, 0);
        assert_eq!(hc_algebroid_dims(h, &mut du, &mut da), HcStatus::Ok);
        assert_eq!((du, da), (1, 1));
        let mut ok = false;
        assert_eq!(hc_algebroid_validate(h, &mut ok), HcStatus::Ok);
        assert!(ok);

        let mut dims = [0usize; 4];
        let mut len = 0;
        let st = hc_algebroid_homology(h, HcTheory::Cyclic, false, 3, dims.as_mut_ptr(), 4, &mut len);
        assert_eq!(st, HcStatus::Ok);
        assert_eq!(&dims[..len], &[1, 0, 1, 0]);
        let st = hc_algebroid_homology(h, HcTheory::Hochschild, true, 3, dims.as_mut_ptr(), 4, &mut len);
        assert_eq!(st, HcStatus::Ok);
        assert_eq!(&dims[..len], &[1, 0, 0, 0]);
        let st = hc_algebroid_homology(h, HcTheory::Cyclic, false, 3, dims.as_mut_ptr(), 2, &mut len);
        assert_eq!(st, HcStatus::BufferTooSmall);
        assert_eq!(len, 4);
        hc_algebroid_free(h);

        assert_eq!(hc_algebroid_gallery(name.as_ptr(), 5, &mut h), HcStatus::Ok);
        let st = hc_algebroid_homology(h, HcTheory::Cyclic, false, 3, dims.as_mut_ptr(), 4, &mut len);
        assert_eq!(st, HcStatus::CharNotZero);
        hc_algebroid_free(h);

        let unknown = CString::new("no_such").unwrap();
        let st = hc_algebroid_gallery(unknown.as_ptr(), 0, &mut h);
        assert_ne!(st, HcStatus::Ok);
        assert_eq!(hc_algebroid_gallery(name.as_ptr(), 4, &mut h), HcStatus::Engine);
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(manifest().join("include/hopfcyc.h")).unwrap();
    for decl in [
        "typedef struct HcScenario HcScenario;",
        "typedef struct HcReport HcReport;",
        "typedef struct HcAlgebroid HcAlgebroid;",
        "HC_STATUS_OK = 0",
        "HcStatus hc_scenario_parse(const char *json, HcScenario **out);",
        "HcStatus hc_report_json(const HcReport *r, char **out);",
        "void hc_string_free(char *s);",
        "int32_t hc_report_exit_code(const HcReport *r);",
        "const char *hc_last_error_message(void);",
    ] {
        assert!(header.contains(decl), "missing {decl}");
    }
}

#[test]
fn header_compiles_as_c() {
    let header = manifest().join("include/hopfcyc.h");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(
        &src,
        format!(
            "#include \"{}\"\nint main(void) {{ HcScenario *s = 0; return hc_scenario_parse(\"{{}}\", &s) == HC_STATUS_OK; }}\n",
            header.display()
        ),
    )
    .unwrap();
    let status = match std::process::Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror"]).arg(&src).status() {
        Ok(s) => s,
        Err(_) => {
            eprintln!("no C compiler; skipped");
            return;
        }
    };
    assert!(status.success());
}
