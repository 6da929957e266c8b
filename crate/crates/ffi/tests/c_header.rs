use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use tlj_ffi::*;

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_staticlib() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    // integration tests only get the rlib; the staticlib needs a library build
    let cargo = std::env::var_os("CARGO").unwrap_or_else(|| "cargo".into());
    let built = Command::new(cargo)
        .args(["build", "-p", "tlj-ffi", "--lib"])
        .current_dir(&manifest)
        .status()
        .unwrap();
    assert!(built.success());
    let lib = target_dir().join("libtlj_ffi.a");
    assert!(lib.exists(), "{}", lib.display());
    let out = std::env::temp_dir().join(format!("tlj_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));

    let expected = unsafe {
        let mut ctx = ptr::null_mut();
        tlj_context_root(16, 1, &mut ctx);
        let word = [1, 1, 1];
        let mut b = ptr::null_mut();
        tlj_braid_new(2, word.as_ptr(), 3, &mut b);
        let mut s = ptr::null_mut();
        tlj_bracket(ctx, b, &mut s);
        let (mut re, mut im) = (0.0, 0.0);
        tlj_scalar_approx(s, &mut re, &mut im);
        tlj_scalar_free(s);
        tlj_braid_free(b);
        tlj_context_free(ctx);
        format!("{re:.12} {im:.12}\n")
    };
    assert_eq!(String::from_utf8_lossy(&run.stdout), expected);
}
