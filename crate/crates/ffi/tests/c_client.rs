//! Compiles a C program against the generated header and the static library.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "cellrep.h"

int main(void) {
    CellrepAlgebra *a = NULL;
    uintptr_t dim = 0;
    if (cellrep_algebra_new_star(2, &a) != CellrepStatus_Ok) return 1;
    if (cellrep_algebra_dimension(a, &dim) != CellrepStatus_Ok || dim != 10) return 2;
    cellrep_algebra_free(a);

    CellrepReport *r = NULL;
    uintptr_t count = 0;
    if (cellrep_classify(3, CELLREP_SIDE_LEFT, CELLREP_TIER_PROJECTIVE_FUNCTOR, &r) != CellrepStatus_Ok) return 3;
    if (cellrep_report_count(r, &count) != CellrepStatus_Ok || count != 5) return 4;
    char *json = NULL;
    if (cellrep_report_to_json(r, &json) != CellrepStatus_Ok || strstr(json, "\"count\":5") == NULL) return 5;
    cellrep_string_free(json);
    cellrep_report_free(r);

    if (cellrep_algebra_new_star(-1, &a) != CellrepStatus_InvalidArgument) return 6;
    if (cellrep_last_error() == NULL) return 7;
    printf("ok\n");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libcellrep_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());

    let work = std::env::temp_dir().join(format!("cellrep_c_client_{}", std::process::id()));
    std::fs::create_dir_all(&work).unwrap();
    let src = work.join("client.c");
    let bin = work.join("client");
    std::fs::write(&src, PROGRAM).unwrap();

    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler available");
    assert!(status.success());

    let out = Command::new(&bin).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
    let _ = std::fs::remove_dir_all(&work);
}
