fn main() {
    // Hermitian eigensolves go through zheev_/cheev_ from the system OpenBLAS
    // (which bundles LAPACK).
    println!("cargo:rustc-link-lib=dylib=openblas");
}
