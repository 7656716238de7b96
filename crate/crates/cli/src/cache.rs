//! On-disk cache of the 𝔢₈ structure constants, keyed by a convention
//! fingerprint.

use e8kit_core::e8::{self, basis_elements, DIM, P_OFF, Q_OFF, R_IDX, S_IDX, T_IDX};
use e8kit_core::lie::{LieAlgebra, StructureConstants};
use e8kit_core::octonion::mult_table;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use std::path::PathBuf;

pub const CACHE_ENV: &str = "E8KIT_CACHE_DIR";

/// `$E8KIT_CACHE_DIR`, else `$XDG_CACHE_HOME/e8kit`, else `~/.cache/e8kit`.
pub fn cache_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("e8kit"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("e8kit"))
}

/// sha256 over the octonion multiplication table and the coordinate layout.
pub fn fingerprint() -> String {
    let mut h = Sha256::new();
    h.update(b"octonion-table\n");
    for row in mult_table() {
        for (sign, k) in row {
            h.update(format!("{sign},{k};").as_bytes());
        }
    }
    h.update(b"\nbasis-ordering\n");
    h.update(format!("e8 {DIM} phi 0 p {P_OFF} q {Q_OFF} r {R_IDX} s {S_IDX} t {T_IDX}\n").as_bytes());
    h.update(format!("e8kit-core {}\n", env!("CARGO_PKG_VERSION")).as_bytes());
    hex::encode(h.finalize())
}

pub fn cache_file() -> Option<PathBuf> {
    cache_dir().map(|d| d.join(format!("e8-{}.json", fingerprint())))
}

/// A loaded table must agree with the direct bracket on a sample of basis
/// pairs before it is trusted.
fn spot_check(g: &LieAlgebra) -> bool {
    let b = basis_elements();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    (0..300).all(|_| {
        let (i, j) = (rng.gen_range(0..DIM), rng.gen_range(0..DIM));
        *g.bracket_basis(i, j) == b[i].bracket(&b[j]).sparse()
    })
}

fn load() -> Option<LieAlgebra> {
    let text = std::fs::read_to_string(cache_file()?).ok()?;
    let sc: StructureConstants = serde_json::from_str(&text).ok()?;
    let g = LieAlgebra::from_structure_constants(&sc).ok()?;
    (g.dim() == DIM && spot_check(&g)).then_some(g)
}

fn store(g: &LieAlgebra) -> std::io::Result<()> {
    let Some(path) = cache_file() else { return Ok(()) };
    std::fs::create_dir_all(path.parent().expect("file has a parent"))?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut s = serde_json::to_string(&g.structure_constants()).map_err(std::io::Error::other)?;
    s.push('\n');
    std::fs::write(&tmp, s)?;
    std::fs::rename(&tmp, &path)
}

/// Install the 𝔢₈ table from the cache, or build it and try to store it.
/// Cache problems are reported on stderr and otherwise ignored.
pub fn ensure_e8() {
    if let Some(g) = load() {
        e8::install_algebra(g);
        return;
    }
    let g = e8::algebra();
    if let Err(e) = store(g) {
        eprintln!("e8kit: could not write cache: {e}");
    }
}
